import time
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from mcrhdc.base import LatencyConfig
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.latency.model import (
    DATASET_SHAPES,
    OPERATIONS,
    REFERENCE_FREQUENCIES_MHZ,
    REFERENCE_OP_TIMES_US,
    BinaryUnitSpec,
    LatencySpec,
    bsc_cycles,
    bsc_inference_cycles,
    cycles,
    inference_cycles,
    to_microseconds,
)
from mcrhdc.utils.logger import get_logger
from mcrhdc.utils.progress import print_sweep_summary

logger = get_logger("latency")

RESULT_COLUMNS = ["family", "simd", "effective_simd", "simd_clamped", "dim", "r", "fp", "classes", "features",
                  *OPERATIONS, "encode", "inference", "freq_mhz", "inference_us", "measured_composite_us"]


def resolve_shape(config: LatencyConfig) -> Tuple[int, int]:
    """``(features, classes)`` from the dataset preset, else from the config."""
    if config.dataset is None:
        return config.features, config.classes
    for name, shape in DATASET_SHAPES.items():
        if name.lower() == config.dataset.lower():
            return shape
    raise InvalidArgumentError(f"unknown dataset preset {config.dataset!r}; known: {sorted(DATASET_SHAPES)}")


def resolve_frequency(config: LatencyConfig, simd: int, family: str) -> Optional[float]:
    if config.freq is None:
        return None
    if config.freq == "auto":
        # clocks are only known for the MCR accelerator
        return REFERENCE_FREQUENCIES_MHZ.get(simd) if family == "mcr" else None
    return float(config.freq)


def _measured_composite(spec: LatencySpec, features: int) -> Optional[float]:
    """Inference time composed from measured per-operation times, when the configuration was measured."""
    measured = REFERENCE_OP_TIMES_US.get((spec.simd, spec.dim))
    if measured is None or spec.r != 16 or spec.fp != 16:
        return None
    search = spec.classes * measured["distance"]
    return features * (measured["bind"] + measured["superimpose"]) + measured["normalize"] + search


def _row(family: str, spec: LatencySpec, features: int) -> Dict:
    if family == "mcr":
        per_op = {op: cycles(op, spec) for op in OPERATIONS}
        breakdown = inference_cycles(spec, features)
        measured = _measured_composite(spec, features)
    else:
        per_op = {op: bsc_cycles(op, spec) for op in OPERATIONS}
        breakdown = bsc_inference_cycles(spec, features)
        measured = None
    return {
        "family": family,
        "simd": spec.simd,
        "effective_simd": spec.effective_simd,
        "simd_clamped": spec.simd_clamped,
        "dim": spec.dim,
        "r": spec.r if family == "mcr" else 2,
        "fp": spec.fp,
        "classes": spec.classes,
        "features": features,
        **per_op,
        "encode": breakdown.bind + breakdown.superimpose,
        "inference": breakdown.total,
        "freq_mhz": spec.freq_mhz if spec.freq_mhz is not None else np.nan,
        "inference_us": to_microseconds(breakdown.total, spec.freq_mhz) if spec.freq_mhz is not None else np.nan,
        "measured_composite_us": measured if measured is not None else np.nan,
    }


def run_latency_sweep(config: LatencyConfig) -> pd.DataFrame:
    """
    Evaluate the cycle model over the (r, SIMD, HVDIM) grid.

    With ``compare_bsc`` every MCR row gets a binary counterpart whose SIMD
    is scaled by ``log2 r`` so both units consume the same bits per cycle.
    """
    start = time.perf_counter()
    features, classes = resolve_shape(config)
    rows: List[Dict] = []
    for r in config.r:
        for simd in config.simd:
            mcr_specs = [LatencySpec(simd=simd, fp=config.fp, r=r, dim=dim, classes=classes,
                                     freq_mhz=resolve_frequency(config, simd, "mcr")) for dim in config.dims]
            rows.extend(_row("mcr", spec, features) for spec in mcr_specs)
            if config.compare_bsc:
                for dim in config.bsc_dims or config.dims:
                    spec = BinaryUnitSpec.paired_with(mcr_specs[0], dim, resolve_frequency(config, simd, "bsc"))
                    rows.append(_row("bsc", spec, features))
    table = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    print_sweep_summary("latency", len(table), time.perf_counter() - start, None)
    return table
