from typing import Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from mcrhdc.errors import InvalidArgumentError

MAX_MODULUS = 1 << 16

ReducePath = Literal["auto", "mask", "division"]
IntLike = Union[int, np.integer, np.ndarray]


class Modulus(BaseModel):
    """
    The cyclic component domain Z_r.

    Components are stored with ``b = ceil(log2 r)`` bits. When ``r == 2^b``
    reduction is a mask of the low ``b`` bits (binary overflow); otherwise an
    explicit division-based remainder is needed.
    """
    model_config = ConfigDict(frozen=True)

    r: int = Field(..., description="Modulus (number of phase steps on the unit circle)")

    @field_validator("r")
    @classmethod
    def validate_r(cls, v: int) -> int:
        if v < 2 or v > MAX_MODULUS:
            raise InvalidArgumentError(f"modulus r must lie in [2, {MAX_MODULUS}], got {v}")
        return v

    @computed_field
    @property
    def b(self) -> int:
        return (self.r - 1).bit_length()

    @computed_field
    @property
    def power_of_two(self) -> bool:
        return self.r == 1 << self.b

    @property
    def mask(self) -> int:
        return (1 << self.b) - 1

    @property
    def dtype(self) -> np.dtype:
        """Smallest unsigned dtype holding a component."""
        return np.dtype(np.uint8) if self.r <= 256 else np.dtype(np.uint16)

    def __str__(self) -> str:
        return f"Z_{self.r}"


def mod_reduce(x: IntLike, mod: Modulus, path: ReducePath = "auto") -> IntLike:
    """
    Reduce ``x`` into ``[0, r-1]``.

    Args:
        x: Integer or integer array, any sign.
        mod: Target modulus.
        path: ``mask`` keeps the low ``b`` bits (power-of-two r only),
            ``division`` uses an explicit remainder, ``auto`` picks ``mask``
            whenever it is valid.

    Returns:
        The reduced value(s); arrays keep their (signed) dtype.
    """
    if path == "auto":
        path = "mask" if mod.power_of_two else "division"
    if path == "mask":
        if not mod.power_of_two:
            raise InvalidArgumentError(f"mask reduction requires a power-of-two modulus, got r={mod.r}")
        # two's complement masking also wraps negative values correctly
        return x & mod.mask
    if path == "division":
        if isinstance(x, np.ndarray):
            return np.remainder(x, mod.r)
        return int(x) % mod.r
    raise InvalidArgumentError(f"unknown reduction path: {path}")
