from mcrhdc.capacity.bench import (
    RESULT_COLUMNS,
    compose,
    decode_sequence,
    encode_sequence,
    run_capacity_sweep,
    run_capacity_trials,
    sequence_accuracy,
)
from mcrhdc.capacity.codebook import Codebook
from mcrhdc.capacity.metrics import InformationMetrics, bootstrap_gap, information_metrics, information_per_symbol

__all__ = [
    "Codebook",
    "InformationMetrics",
    "RESULT_COLUMNS",
    "bootstrap_gap",
    "compose",
    "decode_sequence",
    "encode_sequence",
    "information_metrics",
    "information_per_symbol",
    "run_capacity_sweep",
    "run_capacity_trials",
    "sequence_accuracy",
]
