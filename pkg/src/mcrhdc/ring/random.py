import zlib
from typing import Union

import numpy as np

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.ring.hypervector import Hypervector
from mcrhdc.ring.modulus import Modulus

SeedKey = Union[int, str]


def _key_to_int(key: SeedKey) -> int:
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    if key < 0:
        raise InvalidArgumentError(f"seed keys must be non-negative, got {key}")
    return int(key)


class RandomSource:
    """
    Deterministic random stream: numpy ``PCG64`` seeded from a ``SeedSequence``.

    A source is owned by one caller. Parallel work derives independent
    sub-streams with :meth:`substream`, whose keys are mixed into the seed
    entropy, so the stream for a given key path never depends on how many
    other streams were created before it.
    """

    def __init__(self, seed: int, *keys: SeedKey):
        if seed < 0 or seed >= 1 << 64:
            raise InvalidArgumentError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.keys = tuple(_key_to_int(k) for k in keys)
        self._seq = np.random.SeedSequence([self.seed, *self.keys])
        self.generator = np.random.Generator(np.random.PCG64(self._seq))

    def substream(self, *keys: SeedKey) -> "RandomSource":
        return RandomSource(self.seed, *self.keys, *keys)

    def integers(self, low: int, high: int, size=None) -> np.ndarray:
        """Uniform integers in ``[low, high)``."""
        return self.generator.integers(low, high, size=size, dtype=np.int64)

    def bits(self, size) -> np.ndarray:
        return self.generator.integers(0, 2, size=size, dtype=np.uint8)

    def uniform(self, low: float = 0.0, high: float = 1.0, size=None) -> np.ndarray:
        return self.generator.uniform(low, high, size=size)

    def normal(self, loc: float = 0.0, scale: float = 1.0, size=None) -> np.ndarray:
        return self.generator.normal(loc, scale, size=size)

    def permutation(self, n: int) -> np.ndarray:
        return self.generator.permutation(n)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, keys={self.keys})"


def random_components(mod: Modulus, dim: int, rng: RandomSource, count: int | None = None) -> np.ndarray:
    """Draw i.i.d. uniform components over ``[0, r-1]``; shape ``(dim,)`` or ``(count, dim)``."""
    if dim < 1:
        raise InvalidArgumentError(f"dim must be >= 1, got {dim}")
    shape = dim if count is None else (count, dim)
    return rng.integers(0, mod.r, size=shape).astype(mod.dtype)


def random_hypervector(mod: Modulus, dim: int, rng: RandomSource) -> Hypervector:
    return Hypervector(modulus=mod, components=random_components(mod, dim, rng))
