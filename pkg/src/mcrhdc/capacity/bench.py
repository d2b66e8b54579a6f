"""
Information-capacity benchmark.

A random symbol sequence ``s`` of length ``m`` is written into one composite
hypervector as the superposition of position-permuted codebook vectors,
``sum_j rho^(m-j)(Phi[s_j])``, normalized once at the end. Decoding undoes
each position's permutation and picks the nearest codebook entry. Decoding
accuracy then yields the information stored per symbol, per component and
per storage bit.
"""
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from mcrhdc.base import CapacityConfig
from mcrhdc.capacity.codebook import Codebook
from mcrhdc.capacity.metrics import information_metrics
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.models.base import ModelDescriptor, VSAModel
from mcrhdc.models.factory import ModelFactory, resolve_model_tokens
from mcrhdc.ring.random import RandomSource
from mcrhdc.utils.logger import get_logger
from mcrhdc.utils.progress import print_sweep_summary
from mcrhdc.utils.scheduler import SweepExecutor, SweepTask
from mcrhdc.utils.timeit import timeit

logger = get_logger("capacity")

RESULT_COLUMNS = ["model", "b", "d", "m", "D", "mean_accuracy", "std_accuracy", "I_tot", "I_dim", "I_bit", "trials"]
# positions x codebook x D elements decoded per chunk
DECODE_CHUNK_ELEMENTS = 1 << 22


def _rotation_index(dim: int, shifts: np.ndarray) -> np.ndarray:
    # row j picks x[(i - shift_j) mod D], i.e. np.roll by shift_j
    return np.remainder(np.arange(dim)[None, :] - shifts[:, None], dim)


def _check_sequence(cb: Codebook, s: Sequence[int]) -> np.ndarray:
    s = np.asarray(s, dtype=np.int64)
    if s.ndim != 1 or s.size == 0:
        raise InvalidArgumentError("a sequence needs at least one symbol")
    if s.min() < 0 or s.max() >= cb.size:
        raise InvalidArgumentError(f"symbol indices must lie in [0, {cb.size - 1}]")
    return s


def positioned_rows(cb: Codebook, s: Sequence[int]) -> np.ndarray:
    """Codebook rows of ``s`` with position ``j`` (1-based) rotated by ``m - j``."""
    s = _check_sequence(cb, s)
    m = s.size
    shifts = m - 1 - np.arange(m)
    return np.take_along_axis(cb.vectors[s], _rotation_index(cb.model.dim, shifts), axis=1)


def encode_sequence(cb: Codebook, s: Sequence[int]):
    """Full-precision superposition of the positioned symbols; nothing is normalized yet."""
    return cb.model.superpose_payload(positioned_rows(cb, s))


def compose(cb: Codebook, s: Sequence[int], rng: Optional[RandomSource] = None,
            normalize_every_step: bool = False) -> np.ndarray:
    """
    Encode ``s`` and normalize to the model's domain.

    With ``normalize_every_step`` the running bundle is renormalized after
    each added symbol instead of once at the end.
    """
    model = cb.model
    if not normalize_every_step:
        return model.normalize_accumulator(encode_sequence(cb, s), rng)
    rows = positioned_rows(cb, s)
    if rows.shape[0] == 1:
        return model.bundle_payload(rows, rng)
    current = rows[0]
    for row in rows[1:]:
        current = model.bundle_payload(np.stack([current, row]), rng)
    return current


def decode_sequence(cb: Codebook, composite: np.ndarray, m: int) -> np.ndarray:
    """Nearest codebook symbol at each of the ``m`` positions; lowest index wins ties."""
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    model = cb.model
    shifts = -(m - 1 - np.arange(m))
    unrolled = np.asarray(composite)[_rotation_index(model.dim, shifts)]
    chunk = max(1, DECODE_CHUNK_ELEMENTS // (cb.size * model.dim))
    decoded = np.empty(m, dtype=np.int64)
    for start in range(0, m, chunk):
        block = unrolled[start:start + chunk]
        dists = model.distance_payload(block[:, None, :], cb.vectors[None, :, :])
        decoded[start:start + chunk] = np.argmin(dists, axis=1)
    return decoded


def sequence_accuracy(decoded: np.ndarray, s: Sequence[int]) -> float:
    return float(np.mean(np.asarray(decoded) == np.asarray(s)))


def _model_key(descriptor: ModelDescriptor) -> str:
    return descriptor.label


def _run_codebook(task: SweepTask, config: CapacityConfig) -> np.ndarray:
    """Accuracies of one (model, d, codebook) cell: shape ``(len(m), sequences)``."""
    descriptor, d, cb_index = task.payload
    model: VSAModel = ModelFactory.get_model(descriptor, config.seed)
    key = _model_key(descriptor)
    cb = Codebook.random(model, d, RandomSource(config.seed, "codebook", d, cb_index, key))
    out = np.empty((len(config.m), config.sequences), dtype=np.float64)
    for mi, m in enumerate(config.m):
        # sequences depend only on (seed, d, codebook, m): every model sees the same ones
        seqs = RandomSource(config.seed, "sequence", d, cb_index, m).integers(0, d, size=(config.sequences, m))
        ties = RandomSource(config.seed, "ties", d, cb_index, m, key)
        for si, s in enumerate(seqs):
            composite = compose(cb, s, ties, config.normalize_every_step)
            out[mi, si] = sequence_accuracy(decode_sequence(cb, composite, m), s)
    return out


def resolve_models(config: CapacityConfig) -> List[ModelDescriptor]:
    return resolve_model_tokens(config.models, "capacity", config.dim, config.arithmetic)


def run_capacity_trials(config: CapacityConfig, jobs: int = 1,
                        show_progress: Optional[bool] = None) -> List[Tuple[ModelDescriptor, int, np.ndarray]]:
    """
    Per-trial decoding accuracies of every (model, d) cell.

    Each entry is ``(descriptor, d, accuracies)`` with ``accuracies`` shaped
    ``(len(m), codebooks * sequences)``, in model-then-d order.
    """
    descriptors = resolve_models(config)
    tasks = [SweepTask((descriptor.label, d, cb), (descriptor, d, cb))
             for descriptor in descriptors for d in config.d for cb in range(config.codebooks)]
    logger.info(f"capacity sweep: {len(descriptors)} models x d={config.d} x m={config.m}, "
                f"D={config.dim}, {config.codebooks}x{config.sequences} trials per cell, {len(tasks)} tasks")
    results = SweepExecutor("capacity", jobs, show_progress).run(tasks, lambda t: _run_codebook(t, config))

    cells = []
    for start in range(0, len(tasks), config.codebooks):
        descriptor, d, _ = tasks[start].payload
        # (len(m), codebooks, sequences)
        cell = np.stack(results[start:start + config.codebooks], axis=1)
        cells.append((descriptor, d, cell.reshape(len(config.m), -1)))
    return cells


@timeit(logger.info, "Capacity sweep took {elapsed_time:.2f} seconds")
def run_capacity_sweep(config: CapacityConfig, jobs: int = 1, show_progress: Optional[bool] = None) -> pd.DataFrame:
    """
    Run every (model, d, m) cell over ``codebooks x sequences`` trials.

    Returns one row per cell with the columns of ``RESULT_COLUMNS``; the
    table is a pure function of ``config``.
    """
    start = time.perf_counter()
    rows = []
    for descriptor, d, trials in run_capacity_trials(config, jobs, show_progress):
        for mi, m in enumerate(config.m):
            acc = trials[mi]
            mean = float(acc.mean())
            info = information_metrics(mean, d, m, config.dim, descriptor.bits_per_component)
            rows.append({
                "model": descriptor.label,
                "b": descriptor.bits_per_component,
                "d": d,
                "m": m,
                "D": config.dim,
                "mean_accuracy": mean,
                "std_accuracy": float(acc.std()),
                "I_tot": info.I_tot,
                "I_dim": info.I_dim,
                "I_bit": info.I_bit,
                "trials": int(acc.size),
            })
    table = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    print_sweep_summary("capacity", len(table), time.perf_counter() - start, None)
    return table
