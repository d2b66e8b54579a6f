import hashlib
from pathlib import Path

import numpy as np
import pandas as pd

from mcrhdc.base import HvConfig
from mcrhdc.errors import DatasetError, InvalidArgumentError
from mcrhdc.ring.hypervector import HEADER, Hypervector, payload_size
from mcrhdc.ring.modulus import Modulus
from mcrhdc.ring.random import RandomSource, random_hypervector
from mcrhdc.utils.logger import get_logger

logger = get_logger("hv")

RESULT_COLUMNS = ["action", "path", "r", "b", "D", "payload_bytes", "file_bytes", "sha256", "preview"]
PREVIEW_COMPONENTS = 16


def _require(config: HvConfig, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(config, n) is None]
    if missing:
        raise InvalidArgumentError(f"hv {config.action} needs {', '.join(missing)}")


def read_components(path: str) -> np.ndarray:
    """Whitespace-separated integer components from a text file."""
    try:
        tokens = Path(path).read_text(encoding="utf-8").split()
    except OSError as e:
        raise DatasetError(f"cannot read {path}: {e}") from e
    try:
        return np.array([int(t) for t in tokens], dtype=np.int64)
    except ValueError as e:
        raise InvalidArgumentError(f"{path} holds a non-integer component: {e}") from e


def write_components(hv: Hypervector, path: str) -> None:
    Path(path).write_text(" ".join(str(int(c)) for c in hv.components) + "\n", encoding="utf-8")


def describe(hv: Hypervector, action: str, path: str) -> dict:
    blob = hv.to_bytes()
    preview = " ".join(str(int(c)) for c in hv.components[:PREVIEW_COMPONENTS])
    return {
        "action": action,
        "path": path,
        "r": hv.r,
        "b": hv.modulus.b,
        "D": hv.dim,
        "payload_bytes": payload_size(hv.dim, hv.modulus),
        "file_bytes": len(blob),
        "sha256": hashlib.sha256(blob[HEADER.size:]).hexdigest(),
        "preview": preview + (" ..." if hv.dim > PREVIEW_COMPONENTS else ""),
    }


def run_hv(config: HvConfig) -> pd.DataFrame:
    """
    Create, convert or inspect ``.mcrv`` hypervector files.

    ``random`` and ``pack`` write a ``.mcrv`` file, ``unpack`` writes the
    components as text and ``inspect`` only reads. Every action returns a
    one-row description of the vector involved.
    """
    if config.action == "random":
        _require(config, "r", "dim", "output")
        hv = random_hypervector(Modulus(r=config.r), config.dim, RandomSource(config.seed, "hv"))
        hv.save(config.output)
        path = config.output
    elif config.action == "pack":
        _require(config, "r", "input", "output")
        hv = Hypervector.from_components(read_components(config.input), config.r)
        hv.save(config.output)
        path = config.output
    elif config.action == "unpack":
        _require(config, "input", "output")
        hv = _load(config.input)
        write_components(hv, config.output)
        path = config.input
    else:
        _require(config, "input")
        hv = _load(config.input)
        path = config.input
    logger.info(f"hv {config.action}: {hv!r}")
    return pd.DataFrame([describe(hv, config.action, path)], columns=RESULT_COLUMNS)


def _load(path: str) -> Hypervector:
    try:
        return Hypervector.load(path)
    except OSError as e:
        raise DatasetError(f"cannot read {path}: {e}") from e
