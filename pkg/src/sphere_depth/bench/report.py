"""Benchmark output: round-trip CSV files and an aligned text table."""

from __future__ import annotations

import csv
import math
from collections.abc import Sequence
from pathlib import Path

from sphere_depth.bench.models import RunRecord
from sphere_depth.bench.stats import FlowPoint, StatTable

RAW_HEADER = [
    "distribution", "notion", "d", "n", "algo", "N", "rep",
    "value", "exact", "evals", "time_ms", "seed",
]  # fmt: skip
STATS_HEADER = ["cell", "algo", "averank", "percbest", "mae", "mre", "mean_time_ms"]
FLOWS_HEADER = ["cell", "algo", "eval_index", "mean_gap"]


def format_number(value: float | None) -> str:
    """17 significant digits (lossless for float64); empty for missing values."""
    if value is None or math.isnan(value):
        return ""
    return f"{value:.17g}"


def _write(path: Path, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_raw_csv(records: Sequence[RunRecord], path: str | Path) -> None:
    rows = [
        [
            r.cell.distribution.family.value,
            r.cell.notion.value,
            str(r.cell.d),
            str(r.n),
            r.variant,
            str(r.cell.budget),
            str(r.replication),
            format_number(r.value),
            format_number(r.exact),
            str(r.evals),
            format_number(r.time_ms),
            str(r.seed),
        ]
        for r in records
    ]
    _write(Path(path), RAW_HEADER, rows)


def write_stats_csv(table: StatTable, path: str | Path) -> None:
    rows = [
        [
            r.cell,
            r.algorithm,
            format_number(r.ave_rank),
            format_number(r.perc_best),
            format_number(r.mae),
            format_number(r.mre),
            format_number(r.mean_time_ms),
        ]
        for r in table.rows
    ]
    _write(Path(path), STATS_HEADER, rows)


def write_flows_csv(points: Sequence[FlowPoint], path: str | Path) -> None:
    rows = [
        [p.cell, p.algorithm, str(p.eval_index), format_number(p.mean_gap)] for p in points
    ]
    _write(Path(path), FLOWS_HEADER, rows)


def _row(cols: list[str], widths: list[int]) -> str:
    return "  ".join(c.ljust(w) for c, w in zip(cols, widths))


def _fixed(value: float | None, digits: int) -> str:
    if value is None or math.isnan(value):
        return "---"
    return f"{value:.{digits}f}"


def format_table(table: StatTable) -> str:
    lines: list[str] = []
    hdr = ["Algorithm", "AveRank", "PercBest", "MAE", "MRE", "Time ms"]
    widths = [16, 8, 9, 10, 10, 10]
    rule = "-" * 72

    lines.append("Benchmark Report")
    lines.append("=" * 72)
    for cell in table.cells():
        lines.append(cell)
        lines.append(_row(hdr, widths))
        lines.append(rule)
        for r in table.for_cell(cell):
            lines.append(
                _row(
                    [
                        r.algorithm[:16],
                        _fixed(r.ave_rank, 3),
                        _fixed(r.perc_best, 1),
                        _fixed(r.mae, 6),
                        _fixed(r.mre, 6),
                        _fixed(r.mean_time_ms, 2),
                    ],
                    widths,
                )
            )
        lines.append("")

    times = table.mean_time_by_algorithm()
    if times:
        lines.append("Mean wall time per run")
        for name, ms in times.items():
            lines.append(f"  {name}: {ms:.2f} ms")
    n = len(table.cells())
    lines.append(f"Cells: {n} | rows: {len(table.rows)}")
    return "\n".join(lines)
