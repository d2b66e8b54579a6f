import time
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from mcrhdc.base import ClassifyConfig
from mcrhdc.classifier.dataset import Dataset, load_dataset
from mcrhdc.classifier.encoder import Encoder
from mcrhdc.classifier.prototypes import PrototypeSet, train
from mcrhdc.models.base import ModelDescriptor, ModelFamily
from mcrhdc.models.factory import ModelFactory, resolve_model_tokens
from mcrhdc.ring.random import RandomSource
from mcrhdc.utils.logger import get_logger
from mcrhdc.utils.progress import print_sweep_summary
from mcrhdc.utils.scheduler import SweepExecutor, SweepTask
from mcrhdc.utils.timeit import timeit

logger = get_logger("classifier")

RESULT_COLUMNS = ["dataset", "model", "b", "D", "mean_accuracy", "std_accuracy", "runs", "memory_bits",
                  "n_train", "n_test", "classes"]


class TrainedClassifier:
    """An encoder plus its finalized prototypes."""

    def __init__(self, encoder: Encoder, prototypes: PrototypeSet):
        self.encoder = encoder
        self.prototypes = prototypes

    def predict(self, xs: np.ndarray) -> np.ndarray:
        return self.prototypes.predict(self.encoder.encode_batch(xs), self.encoder.model)

    def accuracy(self, xs: np.ndarray, ys: np.ndarray) -> float:
        if len(ys) == 0:
            return float("nan")
        return float(np.mean(self.predict(xs) == np.asarray(ys)))

    def with_arithmetic(self, arithmetic: str) -> "TrainedClassifier":
        """
        The same trained classifier predicting through another MCR arithmetic path.

        Keys and prototypes are shared; only encoding and distance change.
        """
        descriptor = self.encoder.model.descriptor
        if descriptor.family != ModelFamily.MCR:
            return self
        model = ModelFactory.get_model(descriptor.with_arithmetic(arithmetic), self.encoder.seed)
        return TrainedClassifier(self.encoder.with_model(model), self.prototypes)


def fit(dataset: Dataset, descriptor: ModelDescriptor, levels: int, epochs: int, eps: float, omega: float,
        seed: int) -> TrainedClassifier:
    run_seed = RandomSource(seed, "run", dataset.name, descriptor.label).integers(0, 1 << 62)
    model = ModelFactory.get_model(descriptor, int(run_seed))
    encoder = Encoder(model, dataset.n_features, levels, dataset.feature_min, dataset.feature_max, int(run_seed))
    prototypes = train(encoder, dataset.x_train, dataset.y_train, dataset.n_classes, epochs, eps, omega,
                       int(run_seed))
    return TrainedClassifier(encoder, prototypes)


def resolve_models(config: ClassifyConfig) -> List[ModelDescriptor]:
    return resolve_model_tokens(config.models, "classify", config.dim, config.arithmetic)


@timeit(logger.info, "Classification benchmark took {elapsed_time:.2f} seconds")
def run_benchmark(config: ClassifyConfig, jobs: int = 1, show_progress: Optional[bool] = None,
                  datasets: Optional[Dict[str, Dataset]] = None) -> pd.DataFrame:
    """
    Train and test every (dataset, model) pair over ``config.runs`` seeds.

    Returns per-pair mean and std test accuracy plus the prototype memory
    footprint ``b * D`` bits.
    """
    start = time.perf_counter()
    names = list(dict.fromkeys(config.datasets))
    if datasets is None:
        datasets = {name: load_dataset(config.data_dir, name) for name in names}
    for dataset in datasets.values():
        logger.info(f"loaded {dataset}")
    descriptors = resolve_models(config)
    tasks = [SweepTask((name, descriptor.label, descriptor.dim, run), (name, descriptor, run))
             for name in names for descriptor in descriptors for run in range(config.runs)]

    def run_one(task: SweepTask) -> float:
        name, descriptor, run = task.payload
        dataset = datasets[name]
        clf = fit(dataset, descriptor, config.levels, config.epochs, config.eps, config.omega,
                  int(RandomSource(config.seed, "seed", run).integers(0, 1 << 62)))
        return clf.accuracy(dataset.x_test, dataset.y_test)

    accuracies = SweepExecutor("classify", jobs, show_progress).run(tasks, run_one)

    rows = []
    for name in names:
        dataset = datasets[name]
        for descriptor in descriptors:
            acc = np.array([a for t, a in zip(tasks, accuracies)
                            if t.payload[0] == name and t.payload[1] == descriptor])
            rows.append({
                "dataset": name,
                "model": descriptor.label,
                "b": descriptor.bits_per_component,
                "D": descriptor.dim,
                "mean_accuracy": float(acc.mean()),
                "std_accuracy": float(acc.std()),
                "runs": int(acc.size),
                "memory_bits": descriptor.bits_per_component * descriptor.dim,
                "n_train": int(dataset.train_idx.size),
                "n_test": int(dataset.test_idx.size),
                "classes": dataset.n_classes,
            })
    table = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    print_sweep_summary("classify", len(table), time.perf_counter() - start, None)
    return table
