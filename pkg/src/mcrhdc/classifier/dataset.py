"""
Tabular datasets in the normalized on-disk format.

A dataset ``<name>`` is two files in one directory:

* ``<name>.csv``: headerless, one sample per row, the feature columns
  followed by an integer label column in ``[0, c-1]``;
* ``<name>.json``: manifest with ``name``, ``n``, ``d`` (features), ``c``
  (classes), ``split_seed`` and ``test_fraction``, or alternatively
  ``split_file`` naming a headerless one-column CSV of 0/1 flags
  (1 = test sample) aligned with the data rows.
"""
import json
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from mcrhdc.errors import DatasetError
from mcrhdc.ring.random import RandomSource
from mcrhdc.utils.logger import get_logger

logger = get_logger("classifier")


class DatasetManifest(BaseModel):
    name: str = Field(..., description="Dataset name")
    n: int = Field(..., description="Number of samples")
    d: int = Field(..., description="Number of features")
    c: int = Field(..., description="Number of classes")
    split_seed: int = Field(default=0, description="Seed of the random train/test split")
    test_fraction: float = Field(default=0.25, description="Share of samples held out for testing")
    split_file: Optional[str] = Field(default=None, description="0/1 test-flag file overriding the random split")


class Dataset:
    """Feature matrix, labels and a disjoint covering train/test split."""

    def __init__(self, name: str, features: np.ndarray, labels: np.ndarray, n_classes: int,
                 train_idx: np.ndarray, test_idx: np.ndarray):
        self.name = name
        self.features = np.asarray(features, dtype=np.float64)
        self.labels = np.asarray(labels, dtype=np.int64)
        self.n_classes = n_classes
        self.train_idx = np.asarray(train_idx, dtype=np.int64)
        self.test_idx = np.asarray(test_idx, dtype=np.int64)
        if np.isnan(self.features).any():
            raise DatasetError(f"{name}: features contain NaN")
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= n_classes):
            raise DatasetError(f"{name}: labels must lie in [0, {n_classes - 1}]")
        covered = np.sort(np.concatenate([self.train_idx, self.test_idx]))
        if not np.array_equal(covered, np.arange(self.labels.size)):
            raise DatasetError(f"{name}: train/test split must be disjoint and cover every sample")
        train = self.features[self.train_idx]
        # feature ranges come from the training split only
        self.feature_min = train.min(axis=0) if train.size else np.zeros(self.n_features)
        self.feature_max = train.max(axis=0) if train.size else np.zeros(self.n_features)

    @property
    def n_features(self) -> int:
        return int(self.features.shape[1])

    @property
    def x_train(self) -> np.ndarray:
        return self.features[self.train_idx]

    @property
    def y_train(self) -> np.ndarray:
        return self.labels[self.train_idx]

    @property
    def x_test(self) -> np.ndarray:
        return self.features[self.test_idx]

    @property
    def y_test(self) -> np.ndarray:
        return self.labels[self.test_idx]

    def __repr__(self) -> str:
        return (f"Dataset({self.name!r}, n={self.labels.size}, d={self.n_features}, c={self.n_classes}, "
                f"train={self.train_idx.size}, test={self.test_idx.size})")


def random_split(n: int, test_fraction: float, seed: int):
    if not 0.0 < test_fraction < 1.0:
        raise DatasetError(f"test_fraction must lie in (0, 1), got {test_fraction}")
    order = RandomSource(seed, "split").permutation(n)
    n_test = int(round(n * test_fraction))
    return np.sort(order[n_test:]), np.sort(order[:n_test])


def load_dataset(data_dir: Union[str, Path], name: str) -> Dataset:
    data_dir = Path(data_dir).expanduser()
    manifest_path = data_dir / f"{name}.json"
    csv_path = data_dir / f"{name}.csv"
    try:
        manifest = DatasetManifest(**json.loads(manifest_path.read_text()))
    except (OSError, ValueError) as e:
        raise DatasetError(f"cannot read manifest {manifest_path}: {e}") from e
    try:
        frame = pd.read_csv(csv_path, header=None)
    except (OSError, ValueError) as e:
        raise DatasetError(f"cannot read dataset {csv_path}: {e}") from e

    if frame.shape[1] != manifest.d + 1:
        raise DatasetError(f"{name}: expected {manifest.d} feature columns plus a label, got {frame.shape[1]} columns")
    keep = ~frame.isna().any(axis=1).to_numpy()
    if not keep.all():
        logger.warning(f"{name}: dropping {int((~keep).sum())} rows with missing values")
    if frame.shape[0] != manifest.n:
        logger.warning(f"{name}: manifest declares n={manifest.n} but the file has {frame.shape[0]} rows")

    if manifest.split_file:
        try:
            flags = pd.read_csv(data_dir / manifest.split_file, header=None).iloc[:, 0].to_numpy()
        except (OSError, ValueError) as e:
            raise DatasetError(f"cannot read split file {manifest.split_file}: {e}") from e
        if flags.size != frame.shape[0]:
            raise DatasetError(f"{name}: split file has {flags.size} flags for {frame.shape[0]} rows")
        flags = flags[keep].astype(bool)
        positions = np.arange(flags.size)
        train_idx, test_idx = positions[~flags], positions[flags]
    else:
        train_idx, test_idx = random_split(int(keep.sum()), manifest.test_fraction, manifest.split_seed)

    values = frame.to_numpy()[keep]
    labels = values[:, -1]
    if not np.all(labels == np.round(labels)):
        raise DatasetError(f"{name}: label column must hold integers")
    return Dataset(manifest.name, values[:, :-1].astype(np.float64), labels.astype(np.int64), manifest.c,
                   train_idx, test_idx)


def write_dataset(data_dir: Union[str, Path], name: str, features: np.ndarray, labels: np.ndarray,
                  n_classes: int, split_seed: int = 0, test_fraction: float = 0.25) -> Path:
    """Write features and labels in the normalized format; returns the manifest path."""
    data_dir = Path(data_dir).expanduser()
    data_dir.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(np.asarray(features, dtype=np.float64))
    frame[frame.shape[1]] = np.asarray(labels, dtype=np.int64)
    frame.to_csv(data_dir / f"{name}.csv", header=False, index=False)
    manifest = DatasetManifest(name=name, n=int(frame.shape[0]), d=int(frame.shape[1] - 1), c=n_classes,
                               split_seed=split_seed, test_fraction=test_fraction)
    manifest_path = data_dir / f"{name}.json"
    manifest_path.write_text(json.dumps(manifest.model_dump(exclude_none=True), indent=2))
    return manifest_path


def make_gaussian_dataset(data_dir: Union[str, Path], name: str = "gaussian", n: int = 200, n_features: int = 1,
                          n_classes: int = 2, separation: float = 6.0, seed: int = 0,
                          test_fraction: float = 0.25) -> Path:
    """
    Synthetic dataset of isotropic unit-variance Gaussian classes.

    Class ``k`` is centred at ``k * separation`` on every feature, so large
    separations give a Bayes accuracy close to 1.
    """
    rng = RandomSource(seed, "gaussian", name)
    labels = np.arange(n) % n_classes
    features = labels[:, None] * separation + rng.normal(0.0, 1.0, size=(n, n_features))
    return write_dataset(data_dir, name, features, labels, n_classes, split_seed=seed, test_fraction=test_fraction)
