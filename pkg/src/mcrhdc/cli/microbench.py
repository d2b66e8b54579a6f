"""
Reference versus packed fast-path throughput of the MCR primitives.

The fast path is timed on pre-packed words, which is how a packed
hypervector store hands them over; the reference path works on the plain
component arrays with explicit remainders.
"""
import time
from typing import Callable, Dict, List, Tuple

import numpy as np
import pandas as pd

from mcrhdc.base import MicrobenchConfig
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.mcr.accumulator import CartesianAccumulator
from mcrhdc.mcr.fixed_point import WIDE_FORMAT
from mcrhdc.mcr.normalize import reference_steps, wta_steps
from mcrhdc.mcr.ops import bind_components, distance_components, get_kernel, unbind_components
from mcrhdc.models.base import ModelFamily
from mcrhdc.models.factory import parse_model_token
from mcrhdc.ring.modulus import Modulus
from mcrhdc.ring.random import RandomSource, random_components
from mcrhdc.utils.logger import get_logger
from mcrhdc.utils.progress import print_sweep_summary
from mcrhdc.utils.timeit import measure, timeit

logger = get_logger("microbench")

RESULT_COLUMNS = ["op", "model", "r", "D", "batch", "repetitions", "reference_median_s", "fast_median_s",
                  "reference_components_per_s", "fast_components_per_s", "speedup", "min_speedup",
                  "meets_min_speedup", "fast_linearity_r2"]

# superposed operands per normalization input
NORMALIZE_OPERANDS = 5


def _callables(op: str, mod: Modulus, dim: int, batch: int,
               rng: RandomSource) -> Tuple[Callable[[], object], Callable[[], object]]:
    kernel = get_kernel(mod)
    a = random_components(mod, dim, rng, batch)
    b = random_components(mod, dim, rng, batch)
    if op == "bind":
        pa, pb = kernel.pack(a), kernel.pack(b)
        return (lambda: bind_components(a, b, mod)), (lambda: kernel.add(pa, pb))
    if op == "unbind":
        pa, pb = kernel.pack(a), kernel.pack(b)
        return (lambda: unbind_components(a, b, mod)), (lambda: kernel.sub(pa, pb))
    if op == "distance":
        pa, pb = kernel.pack(a), kernel.pack(b)
        return (lambda: distance_components(a, b, mod)), (lambda: kernel.distance(pa, pb))
    if op == "normalize":
        if mod.r < 4:
            raise InvalidArgumentError(f"normalize microbenchmark needs r >= 4, got {mod.r}")
        # one accumulator over batch * D components
        acc = CartesianAccumulator(mod, batch * dim, WIDE_FORMAT)
        acc.accumulate_many(random_components(mod, batch * dim, rng, NORMALIZE_OPERANDS))
        return (lambda: reference_steps(acc)), (lambda: wta_steps(acc))
    raise InvalidArgumentError(f"unknown operation: {op}")


def _linearity_r2(dims: List[int], medians: List[float]) -> float:
    """R^2 of a least-squares line through (D, median time)."""
    if len(dims) < 2:
        return float("nan")
    x = np.asarray(dims, dtype=np.float64)
    y = np.asarray(medians, dtype=np.float64)
    slope, intercept = np.polyfit(x, y, 1)
    residual = np.sum((y - (slope * x + intercept)) ** 2)
    total = np.sum((y - y.mean()) ** 2)
    return float(1.0 - residual / total) if total > 0 else 1.0


@timeit(logger.info, "Microbenchmark took {elapsed_time:.2f} seconds")
def run_microbench(config: MicrobenchConfig) -> pd.DataFrame:
    """Median wall time and throughput of both arithmetic paths per (op, model, D)."""
    start = time.perf_counter()
    rows: List[Dict] = []
    for token in config.models:
        descriptor = parse_model_token(token, "capacity", config.dims[0], "fast")
        if descriptor.family != ModelFamily.MCR:
            raise InvalidArgumentError(f"microbench only covers MCR models, got {token!r}")
        mod = Modulus(r=descriptor.r)
        for op in config.ops:
            cells = []
            for dim in config.dims:
                rng = RandomSource(config.seed, "microbench", op, mod.r, dim)
                reference_fn, fast_fn = _callables(op, mod, dim, config.batch, rng)
                reference = float(np.median(measure(reference_fn, config.repetitions)))
                fast = float(np.median(measure(fast_fn, config.repetitions)))
                components = config.batch * dim
                speedup = reference / fast if fast > 0 else float("inf")
                cells.append({
                    "op": op,
                    "model": descriptor.label,
                    "r": mod.r,
                    "D": dim,
                    "batch": config.batch,
                    "repetitions": config.repetitions,
                    "reference_median_s": reference,
                    "fast_median_s": fast,
                    "reference_components_per_s": components / reference if reference > 0 else float("inf"),
                    "fast_components_per_s": components / fast if fast > 0 else float("inf"),
                    "speedup": speedup,
                    "min_speedup": config.min_speedup,
                    "meets_min_speedup": bool(speedup >= config.min_speedup),
                })
                logger.debug(f"{op} {descriptor.label} D={dim}: {speedup:.1f}x")
            r2 = _linearity_r2([c["D"] for c in cells], [c["fast_median_s"] for c in cells])
            for cell in cells:
                cell["fast_linearity_r2"] = r2
                if not cell["meets_min_speedup"]:
                    logger.warning(f"{op} {cell['model']} D={cell['D']}: fast path speedup "
                                   f"{cell['speedup']:.2f}x is below {config.min_speedup}x")
            rows.extend(cells)
    table = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    print_sweep_summary("microbench", len(table), time.perf_counter() - start, None)
    return table
