from mcrhdc.mcr.accumulator import CartesianAccumulator
from mcrhdc.mcr.fixed_point import DEFAULT_FORMAT, WIDE_FORMAT, FixedPointFormat, round_half_away
from mcrhdc.mcr.lut import TrigLUT, get_lut
from mcrhdc.mcr.normalize import (
    NormalizationComparison,
    compare_normalizations,
    normalize_reference,
    normalize_wta,
)
from mcrhdc.mcr.ops import (
    Arithmetic,
    bind,
    distance,
    distance_components,
    get_kernel,
    permute_block,
    permute_cyclic,
    search,
    unbind,
)

__all__ = [
    "Arithmetic",
    "CartesianAccumulator",
    "DEFAULT_FORMAT",
    "FixedPointFormat",
    "NormalizationComparison",
    "TrigLUT",
    "WIDE_FORMAT",
    "bind",
    "compare_normalizations",
    "distance",
    "distance_components",
    "get_kernel",
    "get_lut",
    "normalize_reference",
    "normalize_wta",
    "permute_block",
    "permute_cyclic",
    "round_half_away",
    "search",
    "unbind",
]
