from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mcrhdc.config import MCRHDC_SEED
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.ring.random import RandomSource


class ModelFamily(str, Enum):
    MCR = "MCR"
    BSC = "BSC"
    MAP_I = "MAP_I"
    MAP_C = "MAP_C"
    FHRR = "FHRR"


class ModelDescriptor(BaseModel):
    """Which model family, at which precision and dimensionality."""
    model_config = ConfigDict(frozen=True)

    family: ModelFamily = Field(..., description="Model family")
    dim: int = Field(..., description="Hypervector dimensionality D")
    r: Optional[int] = Field(default=None, description="Modulus (MCR only)")
    int_bits: Optional[int] = Field(default=None, description="Quantization bits (MAP-I only)")
    arithmetic: Literal["reference", "fast"] = Field(default="reference", description="MCR arithmetic path")

    @model_validator(mode="after")
    def validate_family_fields(self) -> "ModelDescriptor":
        if self.dim < 1:
            raise InvalidArgumentError(f"dim must be >= 1, got {self.dim}")
        if self.family == ModelFamily.MCR:
            if self.r is None or not 2 <= self.r <= 1 << 16:
                raise InvalidArgumentError(f"MCR needs a modulus r in [2, 65536], got {self.r}")
            if self.arithmetic == "fast" and self.r & (self.r - 1):
                raise InvalidArgumentError(f"the fast MCR path needs a power-of-two r, got r={self.r}")
        elif self.r is not None:
            raise InvalidArgumentError(f"r only applies to MCR, not {self.family.value}")
        if self.family == ModelFamily.MAP_I:
            if self.int_bits is None or not 2 <= self.int_bits <= 32:
                raise InvalidArgumentError(f"MAP-I needs int_bits in [2, 32], got {self.int_bits}")
        elif self.int_bits is not None:
            raise InvalidArgumentError(f"int_bits only applies to MAP-I, not {self.family.value}")
        return self

    @property
    def bits_per_component(self) -> int:
        if self.family == ModelFamily.MCR:
            return (self.r - 1).bit_length()
        if self.family == ModelFamily.BSC:
            return 1
        if self.family == ModelFamily.MAP_I:
            return self.int_bits
        if self.family == ModelFamily.MAP_C:
            return 32
        return 128

    @property
    def label(self) -> str:
        """Short unambiguous name used in result tables."""
        if self.family == ModelFamily.MCR:
            return f"mcr-r{self.r}"
        if self.family == ModelFamily.MAP_I:
            return f"mapi{self.int_bits}"
        if self.family == ModelFamily.MAP_C:
            return "mapc32"
        return self.family.value.lower()

    def with_dim(self, dim: int) -> "ModelDescriptor":
        return ModelDescriptor(**{**self.model_dump(), "dim": dim})

    def with_arithmetic(self, arithmetic: str) -> "ModelDescriptor":
        return ModelDescriptor(**{**self.model_dump(), "arithmetic": arithmetic})

    def __str__(self) -> str:
        return f"{self.label}:{self.dim}"


class GenericHV(BaseModel):
    """A hypervector of any family: its descriptor plus an unpacked payload array."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    descriptor: ModelDescriptor
    payload: np.ndarray

    @model_validator(mode="after")
    def validate_payload(self) -> "GenericHV":
        payload = self.payload
        if payload.shape != (self.descriptor.dim,):
            raise InvalidArgumentError(f"payload shape {payload.shape} does not match D={self.descriptor.dim}")
        family = self.descriptor.family
        if family == ModelFamily.BSC and not np.isin(payload, (0, 1)).all():
            raise InvalidArgumentError("BSC payload must be binary")
        if family == ModelFamily.MCR and (payload.min() < 0 or payload.max() >= self.descriptor.r):
            raise InvalidArgumentError(f"MCR payload must lie in [0, {self.descriptor.r - 1}]")
        if family == ModelFamily.FHRR and (payload.min() < 0 or payload.max() >= 2 * np.pi):
            raise InvalidArgumentError("FHRR phases must lie in [0, 2*pi)")
        if family in (ModelFamily.MAP_I, ModelFamily.MAP_C) and not np.isfinite(payload).all():
            raise InvalidArgumentError("MAP payload must be finite")
        payload.setflags(write=False)
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenericHV):
            return NotImplemented
        return self.descriptor == other.descriptor and np.array_equal(self.payload, other.payload)

    def __hash__(self) -> int:
        return hash((self.descriptor, self.payload.tobytes()))


class DenseAccumulator(BaseModel):
    """Full-precision running sum for the BSC, MAP and FHRR families."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    total: np.ndarray
    count: int = 0


class VSAModel(ABC):
    """
    One model family behind a uniform interface.

    The ``*_payload`` methods are the batched workhorses used by the harnesses:
    they take raw arrays whose last axis is the dimension and broadcast over
    leading axes. The ``model_*`` methods wrap them for single
    :class:`GenericHV` values. Every distance is "lower means more similar".
    """

    def __init__(self, descriptor: ModelDescriptor, seed: int = MCRHDC_SEED):
        self.descriptor = descriptor
        self.dim = descriptor.dim
        # majority ties and similar tie-breaks draw from this stream
        self.tie_rng = RandomSource(seed, "ties", descriptor.label)

    # ---------------------------------------------------------------- payloads

    @abstractmethod
    def random_payload(self, rng: RandomSource, count: Optional[int] = None) -> np.ndarray:
        """Random base vectors: shape ``(D,)`` or ``(count, D)``."""
        raise NotImplementedError

    @abstractmethod
    def bind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def unbind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def permute_payload(self, a: np.ndarray, shift: int) -> np.ndarray:
        return np.roll(a, shift, axis=-1)

    @abstractmethod
    def superpose_payload(self, rows: np.ndarray) -> Any:
        """Full-precision superposition of the ``(m, D)`` rows."""
        raise NotImplementedError

    @abstractmethod
    def normalize_accumulator(self, acc: Any, rng: Optional[RandomSource] = None) -> np.ndarray:
        """Project a superposition back onto the family's domain."""
        raise NotImplementedError

    @abstractmethod
    def distance_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def level_symbols(self) -> Tuple[Any, Any]:
        """The ``(low, high)`` component values of the thermometer code."""
        raise NotImplementedError

    @abstractmethod
    def embed(self, payload: np.ndarray) -> np.ndarray:
        """Real or complex embedding in which prototypes are trained."""
        raise NotImplementedError

    @abstractmethod
    def discretize(self, embedding: np.ndarray) -> np.ndarray:
        """Map a trained embedding back onto the family's domain."""
        raise NotImplementedError

    def bundle_payload(self, rows: np.ndarray, rng: Optional[RandomSource] = None) -> np.ndarray:
        return self.normalize_accumulator(self.superpose_payload(rows), rng)

    # ---------------------------------------------------------------- values

    def wrap(self, payload: np.ndarray) -> GenericHV:
        return GenericHV(descriptor=self.descriptor, payload=np.array(payload))

    def _check(self, *values: GenericHV) -> None:
        for v in values:
            if v.descriptor.model_dump(exclude={"arithmetic"}) != self.descriptor.model_dump(exclude={"arithmetic"}):
                raise InvalidArgumentError(f"descriptor mismatch: {v.descriptor} vs {self.descriptor}")

    def random(self, rng: RandomSource) -> GenericHV:
        return self.wrap(self.random_payload(rng))

    def model_bind(self, a: GenericHV, b: GenericHV) -> GenericHV:
        self._check(a, b)
        return self.wrap(self.bind_payload(a.payload, b.payload))

    def model_unbind(self, a: GenericHV, b: GenericHV) -> GenericHV:
        self._check(a, b)
        return self.wrap(self.unbind_payload(a.payload, b.payload))

    def model_superpose(self, values: Sequence[GenericHV]) -> Any:
        if not values:
            raise InvalidArgumentError("superposition needs at least one hypervector")
        self._check(*values)
        return self.superpose_payload(np.stack([v.payload for v in values]))

    def model_normalize(self, acc: Any, rng: Optional[RandomSource] = None) -> GenericHV:
        return self.wrap(self.normalize_accumulator(acc, rng))

    def model_distance(self, a: GenericHV, b: GenericHV) -> float:
        self._check(a, b)
        return float(self.distance_payload(a.payload, b.payload))

    def model_permute(self, a: GenericHV, shift: int) -> GenericHV:
        self._check(a)
        return self.wrap(self.permute_payload(a.payload, shift))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"


def cosine_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``1 - cos(a, b)`` along the last axis; a zero-norm operand gives 1."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    dot = (a * b).sum(axis=-1)
    norm_sq = (a * a).sum(axis=-1) * (b * b).sum(axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        sim = np.where(norm_sq > 0, dot / np.sqrt(norm_sq), 0.0)
    return 1.0 - sim
