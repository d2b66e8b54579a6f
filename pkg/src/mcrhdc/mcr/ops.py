"""MCR algebra: binding, unbinding, modular Manhattan distance, permutations and search."""
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.ring.hypervector import Hypervector
from mcrhdc.ring.kernels import PackedKernel
from mcrhdc.ring.modulus import Modulus, mod_reduce

Arithmetic = Literal["reference", "fast"]


@lru_cache(maxsize=32)
def get_kernel(mod: Modulus) -> PackedKernel:
    return PackedKernel(mod)


def _check_pair(h: Hypervector, u: Hypervector) -> None:
    if h.modulus != u.modulus:
        raise InvalidArgumentError(f"modulus mismatch: {h.modulus} vs {u.modulus}")
    if h.dim != u.dim:
        raise InvalidArgumentError(f"dimension mismatch: {h.dim} vs {u.dim}")


def _wrap(components: np.ndarray, mod: Modulus) -> Hypervector:
    return Hypervector(modulus=mod, components=components)


def bind_components(a: np.ndarray, b: np.ndarray, mod: Modulus) -> np.ndarray:
    return mod_reduce(a.astype(np.int64) + b.astype(np.int64), mod, "division").astype(mod.dtype)


def unbind_components(a: np.ndarray, b: np.ndarray, mod: Modulus) -> np.ndarray:
    return mod_reduce(a.astype(np.int64) - b.astype(np.int64), mod, "division").astype(mod.dtype)


def distance_components(a: np.ndarray, b: np.ndarray, mod: Modulus) -> np.ndarray:
    """
    Modular Manhattan distance along the last axis, broadcasting leading axes.

    A ``(D,)`` query against a ``(c, D)`` matrix yields ``c`` distances.
    """
    diff = np.remainder(a.astype(np.int64) - b.astype(np.int64), mod.r)
    return np.minimum(diff, mod.r - diff).sum(axis=-1)


def bind(h: Hypervector, u: Hypervector, arithmetic: Arithmetic = "reference") -> Hypervector:
    _check_pair(h, u)
    if arithmetic == "fast":
        kernel = get_kernel(h.modulus)
        out = kernel.add(kernel.pack(h.components), kernel.pack(u.components))
        return _wrap(kernel.unpack(out, h.dim), h.modulus)
    return _wrap(bind_components(h.components, u.components, h.modulus), h.modulus)


def unbind(c: Hypervector, u: Hypervector, arithmetic: Arithmetic = "reference") -> Hypervector:
    _check_pair(c, u)
    if arithmetic == "fast":
        kernel = get_kernel(c.modulus)
        out = kernel.sub(kernel.pack(c.components), kernel.pack(u.components))
        return _wrap(kernel.unpack(out, c.dim), c.modulus)
    return _wrap(unbind_components(c.components, u.components, c.modulus), c.modulus)


def distance(h: Hypervector, u: Hypervector, arithmetic: Arithmetic = "reference") -> int:
    """Sum over components of the shorter way around the circle; range ``[0, D*floor(r/2)]``."""
    _check_pair(h, u)
    if arithmetic == "fast":
        kernel = get_kernel(h.modulus)
        return int(kernel.distance(kernel.pack(h.components), kernel.pack(u.components)))
    return int(distance_components(h.components, u.components, h.modulus))


def permute_cyclic(h: Hypervector, shift: int) -> Hypervector:
    """``out[i] = h[(i - shift) mod D]``."""
    return _wrap(np.roll(h.components, shift), h.modulus)


def permute_block(h: Hypervector, block_size: int, shift: int) -> Hypervector:
    """Move block ``j`` to position ``(j + shift) mod (D / block_size)``; components inside a block keep their order."""
    if block_size < 1 or h.dim % block_size:
        raise InvalidArgumentError(f"block size {block_size} does not divide D={h.dim}")
    blocks = h.components.reshape(-1, block_size)
    return _wrap(np.roll(blocks, shift, axis=0).reshape(-1), h.modulus)


def search(query: Hypervector, prototypes: Sequence[Hypervector], arithmetic: Arithmetic = "reference") -> int:
    """Index of the nearest prototype; the lowest index wins ties."""
    if not prototypes:
        raise InvalidArgumentError("search needs at least one prototype")
    for p in prototypes:
        _check_pair(query, p)
    matrix = np.stack([p.components for p in prototypes])
    if arithmetic == "fast":
        kernel = get_kernel(query.modulus)
        dists = kernel.distance(kernel.pack(query.components), kernel.pack(matrix))
    else:
        dists = distance_components(query.components, matrix, query.modulus)
    # argmin returns the first minimum
    return int(np.argmin(dists))
