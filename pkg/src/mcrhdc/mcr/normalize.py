"""
Projection of a Cartesian accumulator back onto Z_r.

Two paths produce the same result away from ties:

* ``normalize_reference`` takes the floating-point ``atan2`` of every
  resultant and rounds its phase to the nearest step.
* ``normalize_wta`` stays in integers: the sign bits of ``(re, im)`` pick a
  quadrant and a winner-take-all over the ``r/4 + 1`` LUT directions of that
  quadrant picks the step with the largest inner product.

Resultants inside the zero-magnitude window (both parts below
``fmt.epsilon_lsb`` raw LSBs) fall back to the rounded mean of the
accumulated integer components on both paths.
"""
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict

from mcrhdc.errors import InvalidStateError, UnsupportedError
from mcrhdc.mcr.accumulator import CartesianAccumulator
from mcrhdc.mcr.fixed_point import round_half_away
from mcrhdc.ring.hypervector import Hypervector
from mcrhdc.ring.modulus import Modulus
from mcrhdc.utils.logger import get_logger

logger = get_logger("mcr")


def _require_count(acc: CartesianAccumulator) -> None:
    if acc.count == 0:
        raise InvalidStateError("cannot normalize an empty accumulator")


def _mean_fallback(acc: CartesianAccumulator, steps: np.ndarray) -> np.ndarray:
    weak = acc.magnitude_below_epsilon()
    if weak.any():
        mean = round_half_away(acc.intsum[weak] / acc.count).astype(np.int64)
        steps = steps.copy()
        steps[weak] = np.remainder(mean, acc.mod.r)
    return steps


def reference_steps(acc: CartesianAccumulator) -> np.ndarray:
    _require_count(acc)
    r = acc.mod.r
    phase = np.remainder(np.arctan2(acc.im_float, acc.re_float), 2.0 * np.pi)
    steps = np.remainder(round_half_away(phase * r / (2.0 * np.pi)).astype(np.int64), r)
    return _mean_fallback(acc, steps)


def normalize_reference(acc: CartesianAccumulator) -> Hypervector:
    return Hypervector(modulus=acc.mod, components=reference_steps(acc))


@lru_cache(maxsize=32)
def quadrant_candidates(mod: Modulus) -> np.ndarray:
    """
    ``(4, r/4 + 1)`` candidate steps per quadrant, each row sorted by value mod r.

    Quadrant 3 ends at ``r``, which wraps to 0 and so heads its row; a first
    maximum along a row is then the lowest step.
    """
    quarter = mod.r // 4
    rows = []
    for q in range(4):
        row = np.remainder(np.arange(q * quarter, (q + 1) * quarter + 1), mod.r)
        rows.append(np.sort(row))
    table = np.array(rows, dtype=np.int64)
    table.setflags(write=False)
    return table


def _quadrant(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    # zero counts as positive
    neg_re = re < 0
    neg_im = im < 0
    q = np.zeros(re.shape, dtype=np.int64)
    q[neg_re & ~neg_im] = 1
    q[neg_re & neg_im] = 2
    q[~neg_re & neg_im] = 3
    return q


def _wta_scores(acc: CartesianAccumulator):
    mod = acc.mod
    if not mod.power_of_two or mod.r < 4:
        raise UnsupportedError(f"WTA normalization needs a power-of-two r >= 4, got r={mod.r}; use the reference path")
    _require_count(acc)
    candidates = quadrant_candidates(mod)[_quadrant(acc.re, acc.im)]
    scores = (acc.re[:, None] * acc.lut.cos_table[candidates]
              + acc.im[:, None] * acc.lut.sin_table[candidates])
    return candidates, scores


def wta_steps(acc: CartesianAccumulator) -> np.ndarray:
    candidates, scores = _wta_scores(acc)
    winner = np.argmax(scores, axis=1)
    steps = candidates[np.arange(acc.dim), winner]
    return _mean_fallback(acc, steps)


def normalize_wta(acc: CartesianAccumulator) -> Hypervector:
    return Hypervector(modulus=acc.mod, components=wta_steps(acc))


class NormalizationComparison(BaseModel):
    """Per-component agreement between the WTA and reference paths."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    reference: np.ndarray
    wta: np.ndarray
    tie_mask: np.ndarray

    @property
    def agree_mask(self) -> np.ndarray:
        return self.reference == self.wta

    @property
    def agreement(self) -> float:
        return float(self.agree_mask.mean())

    @property
    def tie_rate(self) -> float:
        return float(self.tie_mask.mean())

    @property
    def non_tie_agreement(self) -> float:
        non_tie = ~self.tie_mask
        if not non_tie.any():
            return 1.0
        return float(self.agree_mask[non_tie].mean())

    @property
    def unexplained_mismatches(self) -> int:
        """Mismatching components that are not near-ties; zero when the paths are consistent."""
        return int(np.count_nonzero(~self.agree_mask & ~self.tie_mask))


def compare_normalizations(acc: CartesianAccumulator) -> NormalizationComparison:
    """
    Run both normalization paths and flag near-tie components.

    A component is a near-tie when the best and second-best WTA inner
    products are closer than LUT rounding can account for, i.e. within
    ``2 * (|re| + |im|) * lut.max_error``. Outside that window the LUT winner
    is also the exact winner, so both paths must agree there.
    """
    reference = reference_steps(acc)
    candidates, scores = _wta_scores(acc)
    wta = _mean_fallback(acc, candidates[np.arange(acc.dim), np.argmax(scores, axis=1)])
    top_two = np.sort(scores, axis=1)[:, -2:]
    gap = top_two[:, 1] - top_two[:, 0]
    bound = 2.0 * (np.abs(acc.re) + np.abs(acc.im)) * acc.lut.max_error
    tie_mask = (gap <= bound) & ~acc.magnitude_below_epsilon()
    comparison = NormalizationComparison(reference=reference, wta=wta, tie_mask=tie_mask)
    if comparison.unexplained_mismatches:
        logger.warning(f"{comparison.unexplained_mismatches} non-tie components differ between WTA and reference")
    if comparison.tie_rate:
        logger.debug(f"WTA near-tie rate {comparison.tie_rate:.4%} over {acc.dim} components (r={acc.mod.r})")
    return comparison
