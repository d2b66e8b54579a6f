from typing import Optional, Tuple

import numpy as np

from mcrhdc.models.base import DenseAccumulator, VSAModel
from mcrhdc.ring.random import RandomSource


class BSCModel(VSAModel):
    """Binary spatter codes: XOR binding, majority bundling, Hamming distance."""

    def random_payload(self, rng: RandomSource, count: Optional[int] = None) -> np.ndarray:
        return rng.bits(self.dim if count is None else (count, self.dim))

    def bind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.bitwise_xor(a, b).astype(np.uint8)

    def unbind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.bind_payload(a, b)

    def superpose_payload(self, rows: np.ndarray) -> DenseAccumulator:
        rows = np.asarray(rows)
        return DenseAccumulator(total=rows.sum(axis=0, dtype=np.int64), count=rows.shape[0])

    def normalize_accumulator(self, acc: DenseAccumulator, rng: Optional[RandomSource] = None) -> np.ndarray:
        """Majority vote; an even split takes a bit from the tie stream."""
        twice = 2 * acc.total
        out = (twice > acc.count).astype(np.uint8)
        ties = twice == acc.count
        if ties.any():
            rng = rng if rng is not None else self.tie_rng
            out[ties] = rng.bits(int(np.count_nonzero(ties)))
        return out

    def distance_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.count_nonzero(np.not_equal(a, b), axis=-1).astype(np.float64)

    def level_symbols(self) -> Tuple[int, int]:
        return 0, 1

    def embed(self, payload: np.ndarray) -> np.ndarray:
        return 1.0 - 2.0 * np.asarray(payload, dtype=np.float64)

    def discretize(self, embedding: np.ndarray) -> np.ndarray:
        # sign; exactly zero maps to bit 0
        return (np.asarray(embedding) < 0).astype(np.uint8)
