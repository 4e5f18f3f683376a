"""Dataset CSV reading and writing, and query-point parsing for the CLI."""

from __future__ import annotations

import csv
import math
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from sphere_depth.bench.report import format_number
from sphere_depth.errors import DataFormatError, DimensionMismatch
from sphere_depth.geometry import FloatArray


def _parse_float(text: str) -> float | None:
    try:
        value = float(text)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def read_dataset_csv(path: str | Path) -> tuple[FloatArray, list[str] | None]:
    """Read an n x d matrix; a first row with any non-numeric field is a header."""
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as f:
        rows = [(i, row) for i, row in enumerate(csv.reader(f), start=1) if row]
    if not rows:
        raise DataFormatError(f"{path}: no data rows")

    header: list[str] | None = None
    first_line, first = rows[0]
    if any(_parse_float(cell.strip()) is None for cell in first):
        header = [cell.strip() for cell in first]
        rows = rows[1:]
        if not rows:
            raise DataFormatError(f"{path}: header but no data rows")

    width = len(header) if header is not None else len(rows[0][1])
    data = np.empty((len(rows), width))
    for r, (line, row) in enumerate(rows):
        if len(row) != width:
            raise DataFormatError(f"{path}: row {line} has {len(row)} columns, expected {width}")
        for c, cell in enumerate(row):
            value = _parse_float(cell.strip())
            if value is None:
                raise DataFormatError(
                    f"{path}: row {line}, column {c + 1}: {cell.strip()!r} is not a finite number"
                )
            data[r, c] = value
    return data, header


def write_dataset_csv(
    X: FloatArray, path: str | Path, header: Sequence[str] | None = None
) -> None:
    """Write rows with 17 significant digits so ``read_dataset_csv`` restores them exactly."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        if header is not None:
            writer.writerow(list(header))
        for row in np.atleast_2d(X):
            writer.writerow([format_number(float(v)) for v in row])


def parse_point(spec: str, X: FloatArray) -> FloatArray:
    """``mean`` for the column means, otherwise comma-separated coordinates."""
    text = spec.strip()
    if text.lower() == "mean":
        return X.mean(axis=0)
    values = [_parse_float(part.strip()) for part in text.split(",")]
    if any(v is None for v in values):
        raise DataFormatError(f"point {spec!r} must be 'mean' or comma-separated numbers")
    point = np.array(values, dtype=np.float64)
    if point.size != X.shape[1]:
        raise DimensionMismatch(f"point has {point.size} coordinates, data has {X.shape[1]}")
    return point

