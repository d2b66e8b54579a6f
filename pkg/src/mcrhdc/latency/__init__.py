from mcrhdc.latency.model import (
    DATASET_SHAPES,
    OPERATIONS,
    REFERENCE_FREQUENCIES_MHZ,
    REFERENCE_OP_TIMES_US,
    BinaryUnitSpec,
    InferenceBreakdown,
    LatencySpec,
    bsc_cycles,
    bsc_inference_cycles,
    cycles,
    inference_cycles,
    to_microseconds,
)
from mcrhdc.latency.sweep import RESULT_COLUMNS, resolve_shape, run_latency_sweep

__all__ = [
    "BinaryUnitSpec",
    "DATASET_SHAPES",
    "InferenceBreakdown",
    "LatencySpec",
    "OPERATIONS",
    "REFERENCE_FREQUENCIES_MHZ",
    "REFERENCE_OP_TIMES_US",
    "RESULT_COLUMNS",
    "bsc_cycles",
    "bsc_inference_cycles",
    "cycles",
    "inference_cycles",
    "resolve_shape",
    "run_latency_sweep",
    "to_microseconds",
]
