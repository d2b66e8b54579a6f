"""
Analytic cycle model of an MCR hypervector accelerator.

Per-operation latencies of the functional units, with ``N = HVDIM / SIMD``
blocks per hypervector:

==============  ==========================================
bind / unbind   ``N``
permute         ``N`` (block-cyclic address remapping)
distance        ``N + ceil(log2 SIMD)`` (adder tree)
superimpose     ``2N`` (real and imaginary halves)
normalize       ``2N * (r/4 + 1)`` (WTA over one quadrant)
search          ``c * (distance + 1)`` (compare-and-update per class)
==============  ==========================================

Only steady-state functional-unit cycles are modelled; instruction issue and
host transfers are not, so measured times sit above these predictions.
"""
import math
from typing import Dict, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.utils.logger import get_logger

logger = get_logger("latency")

Operation = Literal["bind", "unbind", "distance", "superimpose", "normalize", "permute", "search"]
OPERATIONS = ("bind", "unbind", "distance", "superimpose", "normalize", "permute", "search")

# post-implementation clocks of the reference accelerator, per SIMD width
REFERENCE_FREQUENCIES_MHZ: Dict[int, float] = {8: 150.0, 16: 125.0, 32: 115.0, 64: 118.0}

# measured accelerated times (us) per (SIMD, HVDIM) at r=16, FP=16
REFERENCE_OP_TIMES_US: Dict[tuple, Dict[str, float]] = {
    (8, 64): {"bind": 0.15, "superimpose": 0.36, "normalize": 0.65, "permute": 0.15, "distance": 0.24},
    (8, 512): {"bind": 0.52, "superimpose": 1.85, "normalize": 4.38, "permute": 0.52, "distance": 0.99},
    (8, 2048): {"bind": 1.80, "superimpose": 6.97, "normalize": 17.18, "permute": 1.80, "distance": 3.55},
    (16, 64): {"bind": 0.14, "superimpose": 0.31, "normalize": 0.46, "permute": 0.14, "distance": 0.23},
    (16, 512): {"bind": 0.37, "superimpose": 1.21, "normalize": 2.70, "permute": 0.37, "distance": 0.68},
    (16, 2048): {"bind": 1.14, "superimpose": 4.28, "normalize": 10.38, "permute": 1.14, "distance": 2.22},
    (32, 64): {"bind": 0.14, "superimpose": 0.28, "normalize": 0.32, "permute": 0.14, "distance": 0.23},
    (32, 512): {"bind": 0.26, "superimpose": 0.77, "normalize": 1.54, "permute": 0.26, "distance": 0.47},
    (32, 2048): {"bind": 0.68, "superimpose": 2.44, "normalize": 5.71, "permute": 0.68, "distance": 1.30},
    (64, 64): {"bind": 0.13, "superimpose": 0.24, "normalize": 0.23, "permute": 0.13, "distance": 0.20},
    (64, 512): {"bind": 0.19, "superimpose": 0.48, "normalize": 0.82, "permute": 0.19, "distance": 0.33},
    (64, 2048): {"bind": 0.39, "superimpose": 1.30, "normalize": 2.86, "permute": 0.39, "distance": 0.74},
}

# (features, classes) of the datasets used for hardware evaluation
DATASET_SHAPES: Dict[str, tuple] = {
    "HabermanSurvival": (3, 2),
    "Adult": (14, 2),
    "Letter": (16, 26),
    "Cardio10": (21, 10),
    "PlantMargin": (64, 100),
    "UCIHAR": (561, 6),
    "ISOLET": (617, 26),
}


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


class LatencySpec(BaseModel):
    simd: int = Field(..., description="Components processed per cycle")
    fp: int = Field(default=16, description="Fixed-point bits of the Cartesian datapath")
    r: int = Field(default=16, description="Modulus")
    dim: int = Field(..., description="HVDIM")
    classes: int = Field(default=1, description="HVCLASS")
    freq_mhz: Optional[float] = Field(default=None, description="Clock for time conversion")

    @model_validator(mode="after")
    def validate_spec(self) -> "LatencySpec":
        self._check_lanes()
        if not _is_power_of_two(self.r) or self.r < 4:
            raise InvalidArgumentError(f"r must be a power of two >= 4, got {self.r}")
        if self.dim < 1 or self.classes < 1:
            raise InvalidArgumentError("HVDIM and HVCLASS must be >= 1")
        if self.freq_mhz is not None and self.freq_mhz <= 0:
            raise InvalidArgumentError(f"frequency must be > 0, got {self.freq_mhz}")
        return self

    def _check_lanes(self) -> None:
        if not _is_power_of_two(self.simd):
            raise InvalidArgumentError(f"SIMD must be a power of two, got {self.simd}")

    @property
    def simd_clamped(self) -> bool:
        return self.simd > self.dim

    @property
    def effective_simd(self) -> int:
        """Lanes that do useful work; wider units behave like ``SIMD = HVDIM``."""
        return min(self.simd, self.dim)

    @property
    def blocks(self) -> int:
        return -(-self.dim // self.effective_simd)

    @property
    def tree_depth(self) -> int:
        return math.ceil(math.log2(self.effective_simd)) if self.effective_simd > 1 else 0


class BinaryUnitSpec(LatencySpec):
    """
    Binary accelerator paired with an MCR unit of modulus ``r``.

    It has ``SIMD * log2 r`` one-bit lanes, so the lane count need not be a
    power of two (24 for an r=8, SIMD=8 unit).
    """

    @classmethod
    def paired_with(cls, spec: LatencySpec, dim: Optional[int] = None,
                    freq_mhz: Optional[float] = None) -> "BinaryUnitSpec":
        return cls(simd=spec.simd * int(math.log2(spec.r)), fp=spec.fp, r=spec.r,
                   dim=spec.dim if dim is None else dim, classes=spec.classes, freq_mhz=freq_mhz)

    def _check_lanes(self) -> None:
        if self.simd < 1:
            raise InvalidArgumentError(f"SIMD must be >= 1, got {self.simd}")


def cycles(op: Operation, spec: LatencySpec) -> int:
    n = spec.blocks
    if op in ("bind", "unbind", "permute"):
        return n
    if op == "distance":
        return n + spec.tree_depth
    if op == "superimpose":
        return 2 * n
    if op == "normalize":
        return 2 * n * (spec.r // 4 + 1)
    if op == "search":
        return spec.classes * (cycles("distance", spec) + 1)
    raise InvalidArgumentError(f"unknown operation: {op}")


def bsc_cycles(op: Operation, spec: LatencySpec) -> int:
    """Binary counterpart: one pass per block for every unit except the distance adder tree."""
    n = spec.blocks
    if op in ("bind", "unbind", "permute", "superimpose", "normalize"):
        return n
    if op == "distance":
        return n + spec.tree_depth
    if op == "search":
        return spec.classes * (bsc_cycles("distance", spec) + 1)
    raise InvalidArgumentError(f"unknown operation: {op}")


class InferenceBreakdown(BaseModel):
    bind: int
    superimpose: int
    normalize: int
    search: int

    @property
    def total(self) -> int:
        return self.bind + self.superimpose + self.normalize + self.search


def _warn_clamped(spec: LatencySpec) -> None:
    if spec.simd_clamped:
        logger.warning(f"SIMD={spec.simd} exceeds HVDIM={spec.dim}; modelled as SIMD={spec.effective_simd}")


def inference_cycles(spec: LatencySpec, d_features: int) -> InferenceBreakdown:
    """Encode ``d_features`` key-value pairs, normalize once, search all classes."""
    if d_features < 1:
        raise InvalidArgumentError(f"d_features must be >= 1, got {d_features}")
    _warn_clamped(spec)
    return InferenceBreakdown(
        bind=d_features * cycles("bind", spec),
        superimpose=d_features * cycles("superimpose", spec),
        normalize=cycles("normalize", spec),
        search=cycles("search", spec),
    )


def bsc_inference_cycles(spec: LatencySpec, d_features: int) -> InferenceBreakdown:
    if d_features < 1:
        raise InvalidArgumentError(f"d_features must be >= 1, got {d_features}")
    _warn_clamped(spec)
    return InferenceBreakdown(
        bind=d_features * bsc_cycles("bind", spec),
        superimpose=d_features * bsc_cycles("superimpose", spec),
        normalize=bsc_cycles("normalize", spec),
        search=bsc_cycles("search", spec),
    )


def to_microseconds(n_cycles: int, freq_mhz: Optional[float]) -> Optional[float]:
    if freq_mhz is None:
        return None
    return n_cycles / freq_mhz
