from typing import Optional

import numpy as np

from mcrhdc.classifier.encoder import Encoder
from mcrhdc.errors import InvalidArgumentError, InvalidStateError
from mcrhdc.models.base import VSAModel
from mcrhdc.ring.random import RandomSource
from mcrhdc.utils.logger import get_logger

logger = get_logger("classifier")

# samples x classes x D elements per distance chunk
DISTANCE_CHUNK_ELEMENTS = 1 << 22


def window_threshold(omega: float) -> float:
    return (1.0 - omega) / (1.0 + omega)


def in_window(d_plus: float, d_minus: float, s: float) -> bool:
    """
    LVQ2.1 window test on the distances to the correct and nearest wrong prototype.

    Both zero counts as ratio 1 (inside for every ``omega`` in (0, 1)); a
    single zero distance has no finite ratio and is outside.
    """
    if d_plus == 0 and d_minus == 0:
        return 1.0 > s
    if d_plus == 0 or d_minus == 0:
        return False
    return min(d_plus / d_minus, d_minus / d_plus) > s


def distance_matrix(model: VSAModel, samples: np.ndarray, prototypes: np.ndarray) -> np.ndarray:
    """``(n, c)`` model distances, computed in sample chunks."""
    n, c = samples.shape[0], prototypes.shape[0]
    out = np.empty((n, c), dtype=np.float64)
    chunk = max(1, DISTANCE_CHUNK_ELEMENTS // max(1, c * model.dim))
    for start in range(0, n, chunk):
        block = samples[start:start + chunk]
        out[start:start + chunk] = model.distance_payload(block[:, None, :], prototypes[None, :, :])
    return out


class PrototypeSet:
    """
    Per-class prototypes of one trained classifier.

    During training the prototypes live in the model's high-precision
    embedding (real or complex) and are reset to unit L2 norm after every
    epoch. :meth:`finalize` maps them onto the model's own domain, after
    which :meth:`predict` is available.
    """

    def __init__(self, model: VSAModel, embeddings: np.ndarray, eps: float, omega: float):
        if eps <= 0:
            raise InvalidArgumentError(f"learning rate must be > 0, got {eps}")
        if not 0 < omega < 1:
            raise InvalidArgumentError(f"omega must lie in (0, 1), got {omega}")
        self.model = model
        self.embeddings = embeddings
        self.eps = eps
        self.omega = omega
        self.threshold = window_threshold(omega)
        self.prototypes: Optional[np.ndarray] = None
        self.updates = 0
        self.skipped = 0

    @property
    def n_classes(self) -> int:
        return int(self.embeddings.shape[0])

    @property
    def finalized(self) -> bool:
        return self.prototypes is not None

    def normalize(self) -> None:
        """Scale every prototype to unit L2 norm; an all-zero prototype has no direction and stays zero."""
        norms = np.linalg.norm(self.embeddings, axis=1)
        nonzero = norms > 0
        if not nonzero.all():
            logger.warning(f"prototypes {np.flatnonzero(~nonzero).tolist()} are all-zero and keep norm 0")
        self.embeddings[nonzero] = self.embeddings[nonzero] / norms[nonzero, None]

    def snapshot(self) -> np.ndarray:
        """Model-domain view of the current high-precision prototypes."""
        return self.model.discretize(self.embeddings)

    def lvq_epoch(self, samples: np.ndarray, embedded: np.ndarray, labels: np.ndarray, order: np.ndarray) -> int:
        """
        One LVQ2.1 pass in the given sample order; returns the number of updates.

        Distances are measured once per epoch against the normalized snapshot
        taken at the start of the epoch.
        """
        if self.n_classes < 2:
            return 0
        dists = distance_matrix(self.model, samples, self.snapshot())
        updates = 0
        for i in order:
            c_plus = labels[i]
            row = dists[i].copy()
            row[c_plus] = np.inf
            c_minus = int(np.argmin(row))
            if not in_window(dists[i, c_plus], dists[i, c_minus], self.threshold):
                self.skipped += 1
                continue
            x = embedded[i]
            self.embeddings[c_plus] += self.eps * (x - self.embeddings[c_plus])
            self.embeddings[c_minus] -= self.eps * (x - self.embeddings[c_minus])
            updates += 1
        self.updates += updates
        return updates

    def finalize(self) -> "PrototypeSet":
        self.prototypes = self.snapshot()
        return self

    def distances(self, encoded: np.ndarray, model: Optional[VSAModel] = None) -> np.ndarray:
        if not self.finalized:
            raise InvalidStateError("prototypes must be finalized before prediction")
        model = model if model is not None else self.model
        encoded = np.atleast_2d(encoded)
        return distance_matrix(model, encoded, self.prototypes)

    def predict(self, encoded: np.ndarray, model: Optional[VSAModel] = None) -> np.ndarray:
        """Nearest prototype per encoded sample; the lowest class index wins ties."""
        return np.argmin(self.distances(encoded, model), axis=1)


def train(encoder: Encoder, x_train: np.ndarray, y_train: np.ndarray, n_classes: int, epochs: int = 10,
          eps: float = 0.01, omega: float = 0.1, seed: int = 0) -> PrototypeSet:
    """
    Centroid initialization followed by ``epochs - 1`` LVQ2.1 epochs.

    Returns a finalized :class:`PrototypeSet`.
    """
    if epochs < 1:
        raise InvalidArgumentError(f"epochs must be >= 1, got {epochs}")
    y_train = np.asarray(y_train, dtype=np.int64)
    missing = sorted(set(range(n_classes)) - set(np.unique(y_train).tolist()))
    if missing:
        raise InvalidArgumentError(f"classes {missing} have no training samples")
    model = encoder.model
    samples = encoder.encode_batch(x_train)
    embedded = model.embed(samples)

    centroids = np.zeros((n_classes, model.dim), dtype=embedded.dtype)
    np.add.at(centroids, y_train, embedded)
    protos = PrototypeSet(model, centroids, eps, omega)
    protos.normalize()

    rng = RandomSource(seed, "lvq-order")
    for epoch in range(2, epochs + 1):
        updates = protos.lvq_epoch(samples, embedded, y_train, rng.permutation(samples.shape[0]))
        protos.normalize()
        logger.debug(f"epoch {epoch}/{epochs}: {updates} LVQ2.1 updates")
    return protos.finalize()
