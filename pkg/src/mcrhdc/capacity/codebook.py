import numpy as np

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.models.base import ModelDescriptor, VSAModel
from mcrhdc.ring.random import RandomSource


class Codebook:
    """``d`` random symbol vectors of one model, stacked as a ``(d, D)`` payload matrix."""

    def __init__(self, model: VSAModel, vectors: np.ndarray):
        if vectors.ndim != 2 or vectors.shape[1] != model.dim:
            raise InvalidArgumentError(f"codebook matrix must be (d, {model.dim}), got {vectors.shape}")
        self.model = model
        self.vectors = vectors
        self.vectors.setflags(write=False)

    @classmethod
    def random(cls, model: VSAModel, size: int, rng: RandomSource) -> "Codebook":
        if size < 1:
            raise InvalidArgumentError(f"codebook size must be >= 1, got {size}")
        return cls(model, model.random_payload(rng, count=size))

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def descriptor(self) -> ModelDescriptor:
        return self.model.descriptor

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Codebook({self.descriptor}, d={self.size})"
