from mcrhdc.classifier.benchmark import RESULT_COLUMNS, TrainedClassifier, fit, run_benchmark
from mcrhdc.classifier.dataset import Dataset, load_dataset, make_gaussian_dataset, write_dataset
from mcrhdc.classifier.encoder import Encoder, quantize_levels
from mcrhdc.classifier.prototypes import PrototypeSet, in_window, train, window_threshold

__all__ = [
    "Dataset",
    "Encoder",
    "PrototypeSet",
    "RESULT_COLUMNS",
    "TrainedClassifier",
    "fit",
    "in_window",
    "load_dataset",
    "make_gaussian_dataset",
    "quantize_levels",
    "run_benchmark",
    "train",
    "window_threshold",
    "write_dataset",
]
