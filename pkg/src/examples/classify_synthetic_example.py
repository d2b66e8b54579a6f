"""
Train MCR and BSC classifiers on a synthetic Gaussian dataset.

The dataset is written in the normalized ``<name>.csv`` + ``<name>.json``
format first, exactly as a real dataset directory would hold it.
"""
import tempfile

from mcrhdc.base import ClassifyConfig
from mcrhdc.classifier import make_gaussian_dataset, run_benchmark

if __name__ == "__main__":
    with tempfile.TemporaryDirectory() as data_dir:
        make_gaussian_dataset(data_dir, "blobs", n=600, n_features=8, n_classes=4, separation=1.5, seed=1)
        config = ClassifyConfig(data_dir=data_dir, datasets=["blobs"],
                                models=["mcr4:64", "mcr4:256", "bsc:1024", "mapi4:256"],
                                levels=64, epochs=5, runs=3)
        table = run_benchmark(config, jobs=4)
    print(table[["model", "memory_bits", "mean_accuracy", "std_accuracy"]].to_string(index=False))
