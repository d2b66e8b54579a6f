from typing import Optional, Tuple

import numpy as np

from mcrhdc.config import MCRHDC_SEED
from mcrhdc.mcr.accumulator import CartesianAccumulator
from mcrhdc.mcr.fixed_point import WIDE_FORMAT, FixedPointFormat, round_half_away
from mcrhdc.mcr.normalize import reference_steps, wta_steps
from mcrhdc.mcr.ops import bind_components, distance_components, get_kernel, unbind_components
from mcrhdc.models.base import ModelDescriptor, VSAModel
from mcrhdc.models.fhrr import ZERO_MAGNITUDE
from mcrhdc.ring.modulus import Modulus
from mcrhdc.ring.random import RandomSource, random_components


class MCRModel(VSAModel):
    """
    Modular composite representation over Z_r.

    ``arithmetic="reference"`` uses explicit remainders and ``atan2``
    normalization; ``arithmetic="fast"`` uses the packed lane kernels and WTA
    normalization (r >= 4; r = 2 keeps the reference normalization). The
    harness-level superposition uses a 32-bit accumulator with 16 fraction
    bits so hundreds of operands fit without saturating.
    """

    def __init__(self, descriptor: ModelDescriptor, seed: int = MCRHDC_SEED, fmt: FixedPointFormat = WIDE_FORMAT):
        super().__init__(descriptor, seed)
        self.mod = Modulus(r=descriptor.r)
        self.fmt = fmt
        self.fast = descriptor.arithmetic == "fast"
        self.kernel = get_kernel(self.mod) if self.fast else None

    def random_payload(self, rng: RandomSource, count: Optional[int] = None) -> np.ndarray:
        return random_components(self.mod, self.dim, rng, count)

    def bind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.fast:
            a, b = np.broadcast_arrays(a, b)
            out = self.kernel.add(self.kernel.pack(a), self.kernel.pack(b))
            return self.kernel.unpack(out, a.shape[-1])
        return bind_components(np.asarray(a), np.asarray(b), self.mod)

    def unbind_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.fast:
            a, b = np.broadcast_arrays(a, b)
            out = self.kernel.sub(self.kernel.pack(a), self.kernel.pack(b))
            return self.kernel.unpack(out, a.shape[-1])
        return unbind_components(np.asarray(a), np.asarray(b), self.mod)

    def superpose_payload(self, rows: np.ndarray) -> CartesianAccumulator:
        acc = CartesianAccumulator(self.mod, self.dim, self.fmt)
        return acc.accumulate_many(np.asarray(rows))

    def normalize_accumulator(self, acc: CartesianAccumulator, rng: Optional[RandomSource] = None) -> np.ndarray:
        if self.fast and self.mod.r >= 4:
            steps = wta_steps(acc)
        else:
            steps = reference_steps(acc)
        return steps.astype(self.mod.dtype)

    def distance_payload(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.fast:
            return self.kernel.distance(self.kernel.pack(np.asarray(a)), self.kernel.pack(np.asarray(b))).astype(np.float64)
        return distance_components(np.asarray(a), np.asarray(b), self.mod).astype(np.float64)

    def level_symbols(self) -> Tuple[int, int]:
        return 0, self.mod.r // 2

    def embed(self, payload: np.ndarray) -> np.ndarray:
        return np.exp(2j * np.pi * np.asarray(payload, dtype=np.float64) / self.mod.r)

    def discretize(self, embedding: np.ndarray) -> np.ndarray:
        """Nearest phase step of each complex component; zero magnitude maps to step 0."""
        z = np.asarray(embedding, dtype=np.complex128)
        r = self.mod.r
        phase = np.remainder(np.angle(z), 2.0 * np.pi)
        steps = np.remainder(round_half_away(phase * r / (2.0 * np.pi)).astype(np.int64), r)
        steps[np.abs(z) < ZERO_MAGNITUDE] = 0
        return steps.astype(self.mod.dtype)
