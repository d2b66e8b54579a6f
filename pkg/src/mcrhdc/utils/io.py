"""
Self-describing result files.

CSV results carry the resolved config on a first comment line::

    # config={"params": {...}, "subcommand": "capacity"}
    model,b,d,m,...

JSON results are ``{"config": {...}, "rows": [...]}``. Keys are sorted and
floats printed by pandas, so equal configs give byte-identical files.
"""
import io
import json
import sys
from pathlib import Path
from typing import Optional, TextIO, Tuple, Union

import pandas as pd

from mcrhdc.errors import DatasetError

CONFIG_PREFIX = "# config="


def dump_header(header: dict) -> str:
    return json.dumps(header, sort_keys=True, separators=(",", ":"))


def format_results(table: pd.DataFrame, header: dict, fmt: str = "csv") -> str:
    if fmt == "json":
        rows = json.loads(table.to_json(orient="records", double_precision=15))
        return json.dumps({"config": header, "rows": rows}, sort_keys=True, indent=2) + "\n"
    buffer = io.StringIO()
    buffer.write(f"{CONFIG_PREFIX}{dump_header(header)}\n")
    table.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_results(table: pd.DataFrame, header: dict, fmt: str = "csv", out: Optional[str] = None,
                  stream: Optional[TextIO] = None) -> None:
    """Write ``table`` to ``out``, or to ``stream`` (stdout) when no path is given."""
    text = format_results(table, header, fmt)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        (stream or sys.stdout).write(text)


def read_results(path: Union[str, Path]) -> Tuple[dict, pd.DataFrame]:
    """Load a result file written by :func:`write_results`; returns ``(config, table)``."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetError(f"cannot read result file {path}: {e}") from e
    if text.lstrip().startswith("{"):
        payload = json.loads(text)
        return payload["config"], pd.DataFrame(payload["rows"])
    first, _, body = text.partition("\n")
    if not first.startswith(CONFIG_PREFIX):
        raise DatasetError(f"{path} has no embedded config line")
    return json.loads(first[len(CONFIG_PREFIX):]), pd.read_csv(io.StringIO(body))
