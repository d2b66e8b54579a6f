from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mcrhdc.config import MCRHDC_EPSILON_LSB, MCRHDC_FP_FRAC_BITS, MCRHDC_FP_TOTAL_BITS
from mcrhdc.errors import InvalidArgumentError


def round_half_away(x):
    """Round to the nearest integer, halves away from zero."""
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


class FixedPointFormat(BaseModel):
    """
    Signed two's complement fixed-point format with saturating addition.

    ``total_bits`` includes the sign bit; ``frac_bits`` of them hold the
    fraction. Raw values are carried in int64 and clamped to the range of
    the format after every addition.
    """
    model_config = ConfigDict(frozen=True)

    total_bits: int = Field(default=MCRHDC_FP_TOTAL_BITS, description="Total bits including sign")
    frac_bits: int = Field(default=MCRHDC_FP_FRAC_BITS, description="Fraction bits")
    epsilon_lsb: int = Field(default=MCRHDC_EPSILON_LSB, description="Zero-magnitude window in raw LSBs")

    @model_validator(mode="after")
    def validate_split(self) -> "FixedPointFormat":
        if not 4 <= self.total_bits <= 48:
            raise InvalidArgumentError(f"total_bits must lie in [4, 48], got {self.total_bits}")
        # +1.0 must be representable: sign bit plus at least one integer bit
        if not 1 <= self.frac_bits <= self.total_bits - 2:
            raise InvalidArgumentError(
                f"frac_bits must lie in [1, {self.total_bits - 2}] for {self.total_bits} total bits, got {self.frac_bits}")
        if self.epsilon_lsb < 0:
            raise InvalidArgumentError(f"epsilon_lsb must be >= 0, got {self.epsilon_lsb}")
        return self

    @property
    def scale(self) -> int:
        return 1 << self.frac_bits

    @property
    def raw_min(self) -> int:
        return -(1 << (self.total_bits - 1))

    @property
    def raw_max(self) -> int:
        return (1 << (self.total_bits - 1)) - 1

    @property
    def max_value(self) -> float:
        return self.raw_max / self.scale

    def to_raw(self, x) -> np.ndarray:
        raw = round_half_away(np.asarray(x, dtype=np.float64) * self.scale).astype(np.int64)
        return np.clip(raw, self.raw_min, self.raw_max)

    def to_float(self, raw) -> np.ndarray:
        return np.asarray(raw, dtype=np.float64) / self.scale

    def saturating_add(self, a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Add raw values and clamp; returns ``(result, saturated_mask)``."""
        total = a + b
        saturated = (total < self.raw_min) | (total > self.raw_max)
        return np.clip(total, self.raw_min, self.raw_max), saturated

    def __str__(self) -> str:
        return f"Q{self.total_bits - self.frac_bits}.{self.frac_bits}"


DEFAULT_FORMAT = FixedPointFormat()
# 32 bits with 16 fraction bits: room for thousands of unit phasors
WIDE_FORMAT = FixedPointFormat(total_bits=32, frac_bits=16)
