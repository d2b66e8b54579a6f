import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, Field

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.ring.random import RandomSource
from mcrhdc.utils.logger import get_logger

logger = get_logger("capacity")


class InformationMetrics(BaseModel):
    I_symb: float = Field(..., description="Bits decoded per symbol")
    I_tot: float = Field(..., description="Bits decoded per sequence")
    I_dim: float = Field(..., description="Bits per hypervector component")
    I_bit: float = Field(..., description="Bits per storage bit")


def _xlog2(x: float, y: float) -> float:
    # x * log2(y) with 0 * log2(0) = 0
    return 0.0 if x == 0.0 else x * math.log2(y)


def information_per_symbol(a: float, d: int) -> float:
    """
    Mutual information between a uniform symbol and its decoded guess.

    Errors are assumed spread evenly over the ``d - 1`` wrong symbols. The
    value is 0 at chance accuracy ``1/d`` and ``log2 d`` at ``a = 1``;
    accuracies below chance are clamped to 0.
    """
    if not 0.0 <= a <= 1.0:
        raise InvalidArgumentError(f"accuracy must lie in [0, 1], got {a}")
    if d < 2:
        raise InvalidArgumentError(f"codebook size d must be >= 2, got {d}")
    if a <= 1.0 / d:
        if a < 1.0 / d:
            logger.warning(f"accuracy {a:.4f} is below chance 1/{d}; information clamped to 0")
        return 0.0
    return _xlog2(a, a * d) + _xlog2(1.0 - a, d * (1.0 - a) / (d - 1))


def information_metrics(a: float, d: int, m: int, dim: int, bits: int) -> InformationMetrics:
    if m < 1 or dim < 1 or bits < 1:
        raise InvalidArgumentError("m, D and b must be >= 1")
    i_symb = information_per_symbol(a, d)
    i_tot = m * i_symb
    return InformationMetrics(I_symb=i_symb, I_tot=i_tot, I_dim=i_tot / dim, I_bit=i_tot / (dim * bits))


def bootstrap_gap(a: np.ndarray, b: np.ndarray, confidence: float = 0.95, resamples: int = 2000,
                  seed: int = 0) -> Tuple[float, float]:
    """
    Percentile bootstrap interval of ``mean(a) - mean(b)``.

    ``a`` and ``b`` are independent trial accuracies of two models, resampled
    with replacement on their own. A lower bound above 0 confirms ``a``
    ahead of ``b`` at the given confidence.
    """
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.size == 0 or b.size == 0:
        raise InvalidArgumentError("bootstrap needs at least one trial per model")
    if not 0.0 < confidence < 1.0:
        raise InvalidArgumentError(f"confidence must lie in (0, 1), got {confidence}")
    if resamples < 1:
        raise InvalidArgumentError(f"resamples must be >= 1, got {resamples}")
    rng = RandomSource(seed, "bootstrap")
    gaps = (a[rng.integers(0, a.size, size=(resamples, a.size))].mean(axis=1)
            - b[rng.integers(0, b.size, size=(resamples, b.size))].mean(axis=1))
    tail = (1.0 - confidence) / 2.0
    low, high = np.quantile(gaps, [tail, 1.0 - tail])
    return float(low), float(high)
