"""
Output writer - CSV/JSON emission with stable number formatting
"""
import csv
import json
import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Sequence

import numpy as np

logger = logging.getLogger(__name__)


def format_number(value: Any) -> str:
    """Stable text form of a scalar: identical inputs give identical bytes"""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def to_jsonable(value: Any) -> Any:
    """Recursively convert numpy scalars/arrays and Fractions for json.dump"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else format_number(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Path):
        return str(value)
    return value


def dumps(payload: Any, indent: int = None) -> str:
    """Deterministic JSON text"""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=indent, ensure_ascii=False)


def write_csv(path: Path, rows: Sequence[Sequence[Any]]) -> Path:
    """
    Write rows (header first) as CSV

    Args:
        path: Target file; parent directories are created
        rows: Header row followed by data rows

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        for row in rows:
            writer.writerow([format_number(v) for v in row])
    logger.debug(f"Wrote {len(rows) - 1} CSV rows to {path}")
    return path


def write_json(path: Path, payload: Any) -> Path:
    """Write a payload as indented, key-sorted JSON"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(payload, indent=2))
        f.write("\n")
    logger.debug(f"Wrote JSON to {path}")
    return path


def read_csv(path: Path) -> List[List[str]]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return [row for row in csv.reader(f)]
