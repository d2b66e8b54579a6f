from typing import Optional, Union

import numpy as np

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.mcr.fixed_point import DEFAULT_FORMAT, FixedPointFormat
from mcrhdc.mcr.lut import TrigLUT, get_lut
from mcrhdc.ring.hypervector import Hypervector
from mcrhdc.ring.modulus import Modulus
from mcrhdc.utils.logger import get_logger

logger = get_logger("mcr")


class CartesianAccumulator:
    """
    Superposition state of MCR hypervectors before normalization.

    Each accumulated component ``k`` contributes the unit phasor
    ``(cos 2*pi*k/r, sin 2*pi*k/r)`` from the trig LUT to the fixed-point
    pair ``(re, im)`` and ``k`` itself to ``intsum``, which the zero-magnitude
    fallback of normalization averages.

    The accumulator is single-owner and mutable. Additions saturate; every
    component that clamps is counted in ``saturations``.
    """

    def __init__(self, mod: Modulus, dim: int, fmt: FixedPointFormat = DEFAULT_FORMAT,
                 lut: Optional[TrigLUT] = None):
        if dim < 1:
            raise InvalidArgumentError(f"dim must be >= 1, got {dim}")
        self.mod = mod
        self.dim = dim
        self.fmt = fmt
        self.lut = lut if lut is not None else get_lut(mod, fmt)
        if self.lut.mod != mod or self.lut.fmt != fmt:
            raise InvalidArgumentError("LUT modulus/format does not match the accumulator")
        self.reset()

    def reset(self) -> None:
        self.re = np.zeros(self.dim, dtype=np.int64)
        self.im = np.zeros(self.dim, dtype=np.int64)
        self.intsum = np.zeros(self.dim, dtype=np.int64)
        self.count = 0
        self.saturations = 0

    def _check_components(self, components: np.ndarray) -> np.ndarray:
        comps = np.asarray(components)
        if comps.shape[-1] != self.dim:
            raise InvalidArgumentError(f"expected {self.dim} components, got {comps.shape[-1]}")
        if comps.size and (comps.min() < 0 or comps.max() >= self.mod.r):
            raise InvalidArgumentError(f"components must lie in [0, {self.mod.r - 1}]")
        return comps.astype(np.int64)

    def accumulate(self, h: Union[Hypervector, np.ndarray]) -> "CartesianAccumulator":
        """Add one hypervector (or a raw component row) to the running sum."""
        if isinstance(h, Hypervector):
            if h.modulus != self.mod:
                raise InvalidArgumentError(f"cannot accumulate a vector over {h.modulus} into {self.mod}")
            comps = self._check_components(h.components)
        else:
            comps = self._check_components(h)
            if comps.ndim != 1:
                raise InvalidArgumentError("accumulate takes one vector; use accumulate_many for a batch")
        self.re, sat_re = self.fmt.saturating_add(self.re, self.lut.cos_table[comps])
        self.im, sat_im = self.fmt.saturating_add(self.im, self.lut.sin_table[comps])
        self.saturations += int(np.count_nonzero(sat_re | sat_im))
        self.intsum += comps
        self.count += 1
        return self

    def accumulate_many(self, rows: np.ndarray) -> "CartesianAccumulator":
        """
        Accumulate a ``(m, D)`` batch of component rows, in row order.

        Results are bit-identical to ``m`` calls of :meth:`accumulate`. The
        batch is summed in one pass whenever no running partial sum leaves
        the format's range; otherwise rows are added one at a time so that
        clamping happens where it would have happened sequentially.
        """
        comps = self._check_components(rows)
        if comps.ndim != 2:
            raise InvalidArgumentError(f"expected a (m, {self.dim}) batch, got shape {comps.shape}")
        if comps.shape[0] == 0:
            return self
        partial_re = self.re + np.cumsum(self.lut.cos_table[comps], axis=0)
        partial_im = self.im + np.cumsum(self.lut.sin_table[comps], axis=0)
        lo, hi = self.fmt.raw_min, self.fmt.raw_max
        if (partial_re.min() >= lo and partial_re.max() <= hi
                and partial_im.min() >= lo and partial_im.max() <= hi):
            self.re = partial_re[-1]
            self.im = partial_im[-1]
            self.intsum += comps.sum(axis=0)
            self.count += comps.shape[0]
            return self
        before = self.saturations
        for row in comps:
            self.accumulate(row)
        if self.saturations > before:
            logger.warning(f"{self.saturations - before} components saturated at {self.fmt} while adding "
                           f"{comps.shape[0]} operands")
        return self

    def magnitude_below_epsilon(self) -> np.ndarray:
        """Components whose resultant is inside the zero-magnitude window."""
        eps = self.fmt.epsilon_lsb
        return (np.abs(self.re) < eps) & (np.abs(self.im) < eps)

    @property
    def re_float(self) -> np.ndarray:
        return self.fmt.to_float(self.re)

    @property
    def im_float(self) -> np.ndarray:
        return self.fmt.to_float(self.im)

    @classmethod
    def from_raw(cls, mod: Modulus, re: np.ndarray, im: np.ndarray, intsum: np.ndarray, count: int,
                 fmt: FixedPointFormat = DEFAULT_FORMAT) -> "CartesianAccumulator":
        """Build an accumulator in a given state (used by oracles and tests)."""
        re = np.asarray(re, dtype=np.int64)
        acc = cls(mod, int(re.shape[0]), fmt)
        acc.re = np.clip(re, fmt.raw_min, fmt.raw_max)
        acc.im = np.clip(np.asarray(im, dtype=np.int64), fmt.raw_min, fmt.raw_max)
        acc.intsum = np.asarray(intsum, dtype=np.int64).copy()
        acc.count = count
        return acc

    def __repr__(self) -> str:
        return (f"CartesianAccumulator(r={self.mod.r}, dim={self.dim}, format={self.fmt}, "
                f"count={self.count}, saturations={self.saturations})")
