from typing import Optional

import numpy as np

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.models.base import VSAModel
from mcrhdc.ring.random import RandomSource


def quantize_levels(values: np.ndarray, lo: np.ndarray, hi: np.ndarray, levels: int) -> np.ndarray:
    """
    Uniform quantization of feature values onto ``[0, levels-1]``.

    Values outside ``[lo, hi]`` are clipped; a constant feature (``lo == hi``)
    maps every value to level 0.
    """
    values = np.asarray(values, dtype=np.float64)
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    span = hi - lo
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = np.where(span > 0, (values - lo) / np.where(span > 0, span, 1.0), 0.0)
    level = np.floor(np.clip(unit, 0.0, 1.0) * (levels - 1) + 0.5)
    return level.astype(np.int64)


class Encoder:
    """
    Key-value encoder for tabular samples.

    Feature ``j`` owns a random key vector; its quantized value selects a
    thermometer-coded level vector whose first ``round(D * level / (L-1))``
    components carry the model's "high" symbol and the rest its "low" symbol.
    A sample is the superposition of its key-value bindings, normalized once.
    """

    def __init__(self, model: VSAModel, n_features: int, levels: int, feature_min: np.ndarray,
                 feature_max: np.ndarray, seed: int, keys: Optional[np.ndarray] = None):
        if levels < 2:
            raise InvalidArgumentError(f"levels must be >= 2, got {levels}")
        if n_features < 1:
            raise InvalidArgumentError(f"n_features must be >= 1, got {n_features}")
        self.model = model
        self.n_features = n_features
        self.levels = levels
        self.feature_min = np.asarray(feature_min, dtype=np.float64)
        self.feature_max = np.asarray(feature_max, dtype=np.float64)
        if self.feature_min.shape != (n_features,) or self.feature_max.shape != (n_features,):
            raise InvalidArgumentError(f"feature ranges must have shape ({n_features},)")
        self.seed = seed
        if keys is None:
            keys = model.random_payload(RandomSource(seed, "keys", model.descriptor.label), count=n_features)
        self.keys = keys
        low, high = model.level_symbols()
        self._low = np.asarray(low, dtype=keys.dtype)
        self._high = np.asarray(high, dtype=keys.dtype)

    def with_model(self, model: VSAModel) -> "Encoder":
        """Same keys and ranges, different arithmetic (e.g. the fast MCR path)."""
        return Encoder(model, self.n_features, self.levels, self.feature_min, self.feature_max, self.seed,
                       keys=self.keys)

    def high_count(self, level: np.ndarray) -> np.ndarray:
        dim = self.model.dim
        return np.floor(dim * np.asarray(level, dtype=np.float64) / (self.levels - 1) + 0.5).astype(np.int64)

    def level_vectors(self, level: np.ndarray) -> np.ndarray:
        """Thermometer vectors for an array of levels: shape ``level.shape + (D,)``."""
        n_high = self.high_count(level)
        high = np.arange(self.model.dim) < n_high[..., None]
        return np.where(high, self._high, self._low)

    def thermometer_encode(self, value: float, feature: int) -> np.ndarray:
        level = quantize_levels(value, self.feature_min[feature], self.feature_max[feature], self.levels)
        return self.level_vectors(level)

    def encode_sample(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n_features,):
            raise InvalidArgumentError(f"expected {self.n_features} features, got shape {x.shape}")
        values = self.level_vectors(quantize_levels(x, self.feature_min, self.feature_max, self.levels))
        bound = self.model.bind_payload(self.keys, values)
        # every sample resolves majority ties with the same bits
        return self.model.bundle_payload(bound, RandomSource(self.seed, "encode-ties"))

    def encode_batch(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.float64)
        if xs.ndim != 2:
            raise InvalidArgumentError(f"expected a (n, {self.n_features}) matrix, got shape {xs.shape}")
        if xs.shape[0] == 0:
            return np.empty((0, self.model.dim), dtype=self.keys.dtype)
        return np.stack([self.encode_sample(x) for x in xs])
