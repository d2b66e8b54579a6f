from functools import lru_cache

import numpy as np

from mcrhdc.mcr.fixed_point import DEFAULT_FORMAT, FixedPointFormat, round_half_away
from mcrhdc.ring.modulus import Modulus


class TrigLUT:
    """
    Fixed-point cosine and sine of every phase step ``2*pi*k/r``.

    Tables hold raw values of ``fmt``; ``max_error`` is the largest rounding
    error of any entry in raw LSBs and bounds how far a LUT inner product can
    drift from the exact one.
    """

    def __init__(self, mod: Modulus, fmt: FixedPointFormat = DEFAULT_FORMAT):
        self.mod = mod
        self.fmt = fmt
        angles = 2.0 * np.pi * np.arange(mod.r, dtype=np.float64) / mod.r
        exact_cos = np.cos(angles) * fmt.scale
        exact_sin = np.sin(angles) * fmt.scale
        self.cos_table = round_half_away(exact_cos).astype(np.int64)
        self.sin_table = round_half_away(exact_sin).astype(np.int64)
        self.cos_table.setflags(write=False)
        self.sin_table.setflags(write=False)
        self.max_error = float(max(np.abs(self.cos_table - exact_cos).max(),
                                   np.abs(self.sin_table - exact_sin).max()))

    def __len__(self) -> int:
        return self.mod.r

    def __repr__(self) -> str:
        return f"TrigLUT(r={self.mod.r}, format={self.fmt})"


@lru_cache(maxsize=64)
def get_lut(mod: Modulus, fmt: FixedPointFormat = DEFAULT_FORMAT) -> TrigLUT:
    return TrigLUT(mod, fmt)
