from typing import Optional, Tuple

import numpy as np

from mcrhdc.models.base import DenseAccumulator, VSAModel
from mcrhdc.ring.random import RandomSource

TWO_PI = 2.0 * np.pi
# resultants shorter than this have no usable phase
ZERO_MAGNITUDE = 1e-9


def phase_of(z: np.ndarray) -> np.ndarray:
    """Phase in ``[0, 2*pi)``; zero-magnitude resultants map to phase 0."""
    phase = np.remainder(np.angle(z), TWO_PI)
    # remainder can round up to exactly 2*pi for tiny negative angles
    phase[phase >= TWO_PI] = 0.0
    phase[np.abs(z) < ZERO_MAGNITUDE] = 0.0
    return phase


def wrap_phase(p: np.ndarray) -> np.ndarray:
    out = np.remainder(p, TWO_PI)
    out[out >= TWO_PI] = 0.0
    return out


class FHRRModel(VSAModel):
    """Fourier HRR: unit phasors with phase-addition binding and complex bundling."""

    def random_payload(self, rng: RandomSource, count: Optional[int] = None) -> np.ndarray:
        return wrap_phase(rng.uniform(0.0, TWO_PI, size=self.dim if count is None else (count, self.dim)))

    def bind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return wrap_phase(np.asarray(a) + b)

    def unbind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return wrap_phase(np.asarray(a) - b)

    def superpose_payload(self, rows: np.ndarray) -> DenseAccumulator:
        rows = np.asarray(rows, dtype=np.float64)
        return DenseAccumulator(total=np.exp(1j * rows).sum(axis=0), count=rows.shape[0])

    def normalize_accumulator(self, acc: DenseAccumulator, rng: Optional[RandomSource] = None) -> np.ndarray:
        return phase_of(acc.total)

    def distance_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Mean angular distance, in ``[0, pi]``."""
        d = np.remainder(np.abs(np.asarray(a, dtype=np.float64) - b), TWO_PI)
        return np.minimum(d, TWO_PI - d).mean(axis=-1)

    def level_symbols(self) -> Tuple[float, float]:
        return 0.0, float(np.pi)

    def embed(self, payload: np.ndarray) -> np.ndarray:
        return np.exp(1j * np.asarray(payload, dtype=np.float64))

    def discretize(self, embedding: np.ndarray) -> np.ndarray:
        return phase_of(np.asarray(embedding, dtype=np.complex128))
