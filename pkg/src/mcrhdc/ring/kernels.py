"""
Packed lane kernels for power-of-two moduli.

Components sit in fixed-width lanes of ``uint64`` words, one spare carry bit
above the ``b`` data bits. Modular addition then needs no reduction step:
the carry out of bit ``b-1`` lands in the spare bit and the lane mask drops
it, which is binary overflow done for every lane of a word at once.
"""
from functools import cached_property

import numpy as np

from mcrhdc.errors import InvalidArgumentError, UnsupportedError
from mcrhdc.ring.modulus import Modulus

WORD_BITS = 64


def lane_width(mod: Modulus) -> int:
    """Smallest power of two holding ``b`` data bits plus one carry bit."""
    w = 1
    while w < mod.b + 1:
        w <<= 1
    return w


def _replicate(pattern: int, stride: int) -> np.uint64:
    value = 0
    for shift in range(0, WORD_BITS, stride):
        value |= pattern << shift
    return np.uint64(value & ((1 << WORD_BITS) - 1))


class PackedKernel:
    """
    Bind, unbind and distance over lane-packed words.

    Arrays handed to the kernel methods have shape ``(..., n_words)`` and
    broadcast against each other, so one query row can be compared with a
    whole codebook in a single call.
    """

    def __init__(self, mod: Modulus):
        if not mod.power_of_two:
            raise UnsupportedError(f"packed kernels need a power-of-two modulus, got r={mod.r}")
        self.mod = mod
        self.b = mod.b
        self.width = lane_width(mod)
        self.lanes = WORD_BITS // self.width
        self._lane_mask = _replicate(mod.mask, self.width)
        self._carry = _replicate(1 << mod.b, self.width)
        self._shift_b = np.uint64(mod.b)
        self._data_mask = np.uint64(mod.mask)

    def n_words(self, dim: int) -> int:
        return -(-dim // self.lanes)

    @cached_property
    def _lane_shifts(self) -> np.ndarray:
        return (np.arange(self.lanes, dtype=np.uint64) * np.uint64(self.width))

    def pack(self, components: np.ndarray) -> np.ndarray:
        """Pack ``(..., D)`` components into ``(..., n_words)`` uint64 words; pad lanes are zero."""
        comps = np.asarray(components)
        if comps.size and (comps.min() < 0 or comps.max() >= self.mod.r):
            raise InvalidArgumentError(f"components must lie in [0, {self.mod.r - 1}]")
        dim = comps.shape[-1]
        pad = self.n_words(dim) * self.lanes - dim
        if pad:
            comps = np.concatenate([comps, np.zeros(comps.shape[:-1] + (pad,), dtype=comps.dtype)], axis=-1)
        if self.width >= 8:
            lanes = comps.astype(f"<u{self.width // 8}")
            return np.ascontiguousarray(lanes).view("<u8").astype(np.uint64)
        grouped = comps.astype(np.uint64).reshape(comps.shape[:-1] + (-1, self.lanes))
        return np.bitwise_or.reduce(grouped << self._lane_shifts, axis=-1)

    def unpack(self, words: np.ndarray, dim: int) -> np.ndarray:
        words = np.asarray(words, dtype=np.uint64)
        if self.width >= 8:
            lanes = np.ascontiguousarray(words.astype("<u8")).view(f"<u{self.width // 8}")
        else:
            lanes = (words[..., None] >> self._lane_shifts) & self._data_mask
            lanes = lanes.reshape(words.shape[:-1] + (-1,))
        return lanes[..., :dim].astype(self.mod.dtype)

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return (x + y) & self._lane_mask

    def sub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # the carry bit in every lane absorbs the borrow
        return ((x | self._carry) - y) & self._lane_mask

    def lane_min(self, d1: np.ndarray, d2: np.ndarray) -> np.ndarray:
        t = (d1 | self._carry) - d2
        # carry bit survives iff d1 >= d2; spread it to a full data mask
        select = ((t & self._carry) >> self._shift_b) * self._data_mask
        return (d2 & select) | (d1 & ~select & self._lane_mask)

    def lane_sum(self, words: np.ndarray) -> np.ndarray:
        """Sum every lane of the last axis into an int64."""
        words = np.asarray(words, dtype=np.uint64)
        width = self.width
        # fold narrow lanes pairwise until each byte holds one sum
        while width < 8:
            keep = _replicate((1 << width) - 1, 2 * width)
            words = (words & keep) + ((words >> np.uint64(width)) & keep)
            width *= 2
        view = np.ascontiguousarray(words).view(f"u{width // 8}")
        return view.sum(axis=-1, dtype=np.int64)

    def distance(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Modular Manhattan distance between packed rows."""
        d1 = self.sub(x, y)
        d2 = self.sub(y, x)
        return self.lane_sum(self.lane_min(d1, d2))
