from typing import Optional, Tuple

import numpy as np

from mcrhdc.models.base import DenseAccumulator, ModelFamily, VSAModel, cosine_distance
from mcrhdc.ring.random import RandomSource


def quantize(values: np.ndarray, bits: int) -> np.ndarray:
    """
    Rescale ``values`` linearly onto ``[-2^(bits-1), 2^(bits-1) - 1]`` and round.

    Each vector (last axis) is rescaled on its own: its observed min and max
    map to the ends of the range, so the quantizer is monotone. A constant
    vector cannot be rescaled and is rounded and clipped instead.
    """
    values = np.asarray(values, dtype=np.float64)
    q_min = -(1 << (bits - 1))
    q_max = (1 << (bits - 1)) - 1
    lo = values.min(axis=-1, keepdims=True)
    hi = values.max(axis=-1, keepdims=True)
    span = hi - lo
    with np.errstate(invalid="ignore", divide="ignore"):
        scaled = np.where(span > 0, (values - lo) / np.where(span > 0, span, 1.0) * (q_max - q_min) + q_min, values)
    return np.clip(np.rint(scaled), q_min, q_max).astype(np.int64)


class MAPModel(VSAModel):
    """
    Multiply-add-permute with bipolar base vectors.

    MAP-I keeps integer components and requantizes bundles to ``int_bits``;
    MAP-C keeps 32-bit floats and never normalizes.
    """

    @property
    def integer(self) -> bool:
        return self.descriptor.family == ModelFamily.MAP_I

    def random_payload(self, rng: RandomSource, count: Optional[int] = None) -> np.ndarray:
        signs = 2 * rng.integers(0, 2, size=self.dim if count is None else (count, self.dim)) - 1
        return signs.astype(np.int64) if self.integer else signs.astype(np.float32)

    def bind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a * b

    def unbind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # bipolar keys are their own inverse
        return a * b

    def superpose_payload(self, rows: np.ndarray) -> DenseAccumulator:
        rows = np.asarray(rows)
        dtype = np.int64 if self.integer else np.float32
        return DenseAccumulator(total=rows.sum(axis=0, dtype=dtype), count=rows.shape[0])

    def normalize_accumulator(self, acc: DenseAccumulator, rng: Optional[RandomSource] = None) -> np.ndarray:
        if self.integer:
            return quantize(acc.total, self.descriptor.int_bits)
        return acc.total.astype(np.float32)

    def distance_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return cosine_distance(a, b)

    def level_symbols(self) -> Tuple[float, float]:
        return -1, 1

    def embed(self, payload: np.ndarray) -> np.ndarray:
        return np.asarray(payload, dtype=np.float64)

    def discretize(self, embedding: np.ndarray) -> np.ndarray:
        if self.integer:
            return quantize(embedding, self.descriptor.int_bits)
        return np.asarray(embedding, dtype=np.float32)
