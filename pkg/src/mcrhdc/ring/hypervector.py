import struct
from pathlib import Path
from typing import Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.ring.modulus import Modulus

MAGIC = b"MCRV"
FORMAT_VERSION = 1
# magic, version u8, r u16, b u8, D u32, 4 reserved bytes
HEADER = struct.Struct("<4sBHBI4x")


def pack(components: Union[Sequence[int], np.ndarray], mod: Modulus) -> bytes:
    """
    Bit-pack components at ``b`` bits each.

    Component ``i`` occupies bits ``[i*b, (i+1)*b)`` of a little-endian bit
    stream (least significant bit first), so the payload is exactly
    ``ceil(D*b/8)`` bytes.
    """
    values = np.asarray(components, dtype=np.int64)
    if values.ndim != 1:
        raise InvalidArgumentError(f"expected a 1-D component list, got shape {values.shape}")
    if values.size and (values.min() < 0 or values.max() >= mod.r):
        raise InvalidArgumentError(f"components must lie in [0, {mod.r - 1}]")
    shifts = np.arange(mod.b, dtype=np.int64)
    bits = ((values[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
    return np.packbits(bits.reshape(-1), bitorder="little").tobytes()


def unpack(data: bytes, mod: Modulus, dim: int) -> np.ndarray:
    """Inverse of :func:`pack`; returns ``dim`` components in ``mod.dtype``."""
    expected = payload_size(dim, mod)
    if len(data) < expected:
        raise InvalidArgumentError(f"payload has {len(data)} bytes, expected {expected}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8, count=expected), bitorder="little")
    bits = bits[: dim * mod.b].reshape(dim, mod.b).astype(np.int64)
    values = bits @ (np.int64(1) << np.arange(mod.b, dtype=np.int64))
    if values.size and values.max() >= mod.r:
        raise InvalidArgumentError(f"payload holds components outside [0, {mod.r - 1}]")
    return values.astype(mod.dtype)


def payload_size(dim: int, mod: Modulus) -> int:
    return (dim * mod.b + 7) // 8


class Hypervector(BaseModel):
    """
    Dense vector of ``dim`` components in Z_r.

    The component array is read-only after construction so instances can be
    shared freely between threads.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    modulus: Modulus = Field(..., description="Component domain")
    components: np.ndarray = Field(..., description="Unpacked components, one per dimension")

    @model_validator(mode="before")
    @classmethod
    def coerce_components(cls, data):
        if isinstance(data, dict) and "components" in data:
            mod = data["modulus"]
            if not isinstance(mod, Modulus):
                mod = Modulus.model_validate(mod)
                data = {**data, "modulus": mod}
            raw = np.asarray(data["components"])
            if raw.ndim != 1 or raw.size == 0:
                raise InvalidArgumentError(f"a hypervector needs a non-empty 1-D component array, got shape {raw.shape}")
            if not np.issubdtype(raw.dtype, np.integer):
                raise InvalidArgumentError(f"components must be integers, got {raw.dtype}")
            if raw.min() < 0 or raw.max() >= mod.r:
                raise InvalidArgumentError(f"components must lie in [0, {mod.r - 1}]")
            array = raw.astype(mod.dtype, copy=True)
            array.setflags(write=False)
            data = {**data, "components": array}
        return data

    @classmethod
    def from_components(cls, components: Union[Sequence[int], np.ndarray], mod: Union[Modulus, int]) -> "Hypervector":
        if isinstance(mod, int):
            mod = Modulus(r=mod)
        return cls(modulus=mod, components=np.asarray(components))

    @classmethod
    def zeros(cls, mod: Modulus, dim: int) -> "Hypervector":
        if dim < 1:
            raise InvalidArgumentError(f"dim must be >= 1, got {dim}")
        return cls(modulus=mod, components=np.zeros(dim, dtype=mod.dtype))

    @property
    def dim(self) -> int:
        return int(self.components.shape[0])

    @property
    def r(self) -> int:
        return self.modulus.r

    def pack(self) -> bytes:
        return pack(self.components, self.modulus)

    @classmethod
    def unpack(cls, data: bytes, mod: Modulus, dim: int) -> "Hypervector":
        return cls(modulus=mod, components=unpack(data, mod, dim))

    def to_bytes(self) -> bytes:
        """Serialize to the 16-byte-header ``.mcrv`` format."""
        # r == 2^16 does not fit a u16 and is stored as 0
        header = HEADER.pack(MAGIC, FORMAT_VERSION, self.r & 0xFFFF, self.modulus.b, self.dim)
        return header + self.pack()

    @classmethod
    def from_bytes(cls, blob: bytes) -> "Hypervector":
        if len(blob) < HEADER.size:
            raise InvalidArgumentError("file is shorter than the hypervector header")
        magic, version, r, b, dim = HEADER.unpack_from(blob)
        if magic != MAGIC:
            raise InvalidArgumentError(f"bad magic {magic!r}, expected {MAGIC!r}")
        if version != FORMAT_VERSION:
            raise InvalidArgumentError(f"unsupported format version {version}")
        mod = Modulus(r=r if r else 1 << 16)
        if mod.b != b:
            raise InvalidArgumentError(f"header declares b={b} but r={mod.r} needs b={mod.b}")
        return cls.unpack(blob[HEADER.size:], mod, dim)

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Hypervector":
        return cls.from_bytes(Path(path).read_bytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypervector):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.components, other.components)

    def __hash__(self) -> int:
        return hash((self.r, self.components.tobytes()))

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.components[:8])
        tail = ", ..." if self.dim > 8 else ""
        return f"Hypervector(r={self.r}, dim={self.dim}, [{head}{tail}])"
