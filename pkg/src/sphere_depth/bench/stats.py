"""Comparison statistics over replications: AveRank, PercBest, MAE, MRE and flow curves.

Value matrices are R x m (replications x algorithm variants); nan marks a
variant that could not run and is left out of that replication's comparison.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.stats import rankdata

from sphere_depth.bench.models import RunRecord
from sphere_depth.errors import ExactNonPositive
from sphere_depth.geometry import FloatArray

logger = logging.getLogger(__name__)

EXACT_FLOOR = 1e-15


def _as_matrix(values: ArrayLike) -> FloatArray:
    arr = np.atleast_2d(np.asarray(values, dtype=np.float64))
    if arr.ndim != 2:
        raise ValueError(f"expected an R x m matrix, got shape {arr.shape}")
    return arr


def ave_rank(values: ArrayLike) -> FloatArray:
    """Mean midrank of each column, rank 1 being the lowest depth of a row."""
    mat = _as_matrix(values)
    sums = np.zeros(mat.shape[1])
    counts = np.zeros(mat.shape[1])
    for row in mat:
        present = ~np.isnan(row)
        if not present.any():
            continue
        sums[present] += rankdata(row[present], method="average")
        counts[present] += 1
    return np.where(counts > 0, sums / np.maximum(counts, 1), np.nan)


def perc_best(values: ArrayLike) -> FloatArray:
    """Percentage of rows in which each column attains the row minimum (ties all count)."""
    mat = _as_matrix(values)
    wins = np.zeros(mat.shape[1])
    counts = np.zeros(mat.shape[1])
    for row in mat:
        present = ~np.isnan(row)
        if not present.any():
            continue
        wins[present] += row[present] == row[present].min()
        counts[present] += 1
    return np.where(counts > 0, 100.0 * wins / np.maximum(counts, 1), np.nan)


def mean_absolute_error(approx: ArrayLike, exact: ArrayLike) -> float:
    a = np.asarray(approx, dtype=np.float64)
    e = np.asarray(exact, dtype=np.float64)
    return float(np.mean(a - e))


def mean_relative_error(approx: ArrayLike, exact: ArrayLike) -> float:
    a = np.asarray(approx, dtype=np.float64)
    e = np.asarray(exact, dtype=np.float64)
    if np.any(e <= EXACT_FLOOR):
        raise ExactNonPositive("relative error needs strictly positive exact depths")
    return float(np.mean((a - e) / e))


def error_stats(approx: ArrayLike, exact: ArrayLike) -> tuple[float, float]:
    """``(MAE, MRE)``: mean signed gap and mean gap relative to the exact depth.

    Approximations are upper bounds, so both are non-negative up to rounding.
    """
    return mean_absolute_error(approx, exact), mean_relative_error(approx, exact)


def geometric_checkpoints(budget: int, points: int) -> list[int]:
    """Roughly ``points`` evaluation indices from 1 to ``budget``, spaced geometrically."""
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    raw = np.geomspace(1, budget, num=max(2, points))
    return sorted({int(round(v)) for v in raw} | {1, budget})


@dataclass(frozen=True)
class StatRow:
    cell: str
    algorithm: str
    ave_rank: float
    perc_best: float
    mae: float | None
    mre: float | None
    mean_time_ms: float | None


@dataclass(frozen=True)
class FlowPoint:
    cell: str
    algorithm: str
    eval_index: int
    mean_gap: float


@dataclass(frozen=True)
class StatTable:
    rows: list[StatRow]

    def cells(self) -> list[str]:
        return list(dict.fromkeys(r.cell for r in self.rows))

    def for_cell(self, cell: str) -> list[StatRow]:
        return [r for r in self.rows if r.cell == cell]

    def row(self, cell: str, algorithm: str) -> StatRow:
        for r in self.rows:
            if r.cell == cell and r.algorithm == algorithm:
                return r
        raise KeyError(f"no statistics for {algorithm} in {cell}")

    def mean_time_by_algorithm(self) -> dict[str, float]:
        times: dict[str, list[float]] = {}
        for r in self.rows:
            if r.mean_time_ms is not None:
                times.setdefault(r.algorithm, []).append(r.mean_time_ms)
        return {name: float(np.mean(ts)) for name, ts in times.items()}


def _group(records: Sequence[RunRecord]) -> dict[str, list[RunRecord]]:
    groups: dict[str, list[RunRecord]] = {}
    for rec in records:
        groups.setdefault(rec.cell.key, []).append(rec)
    return groups


def _cell_matrix(
    records: Sequence[RunRecord],
) -> tuple[list[str], list[int], FloatArray]:
    variants = list(dict.fromkeys(r.variant for r in records))
    reps = sorted({r.replication for r in records})
    col = {v: j for j, v in enumerate(variants)}
    row = {rep: i for i, rep in enumerate(reps)}
    mat = np.full((len(reps), len(variants)), np.nan)
    for r in records:
        mat[row[r.replication], col[r.variant]] = r.value
    return variants, reps, mat


def _error_columns(
    cell: str, name: str, recs: list[RunRecord]
) -> tuple[float | None, float | None]:
    present = [r for r in recs if not r.missing and r.exact is not None]
    if not present or len(present) < len(recs):
        return None, None
    approx = [r.value for r in present]
    exact = [r.exact for r in present]
    mae = mean_absolute_error(approx, exact)
    try:
        mre = mean_relative_error(approx, exact)
    except ExactNonPositive:
        logger.warning("MRE undefined for %s in %s: exact depth is zero", name, cell)
        mre = None
    return mae, mre


def summarize(records: Sequence[RunRecord]) -> StatTable:
    """Aggregate raw records into per-(cell, variant) statistics.

    Depends only on the records, so re-aggregating the same raw results
    reproduces the table exactly.
    """
    rows: list[StatRow] = []
    for cell, recs in _group(records).items():
        variants, _, mat = _cell_matrix(recs)
        ranks = ave_rank(mat)
        best = perc_best(mat)
        for j, name in enumerate(variants):
            mine = [r for r in recs if r.variant == name]
            mae, mre = _error_columns(cell, name, mine)
            times = [r.time_ms for r in mine if r.time_ms is not None and not r.missing]
            rows.append(
                StatRow(
                    cell=cell,
                    algorithm=name,
                    ave_rank=float(ranks[j]),
                    perc_best=float(best[j]),
                    mae=mae,
                    mre=mre,
                    mean_time_ms=float(np.mean(times)) if times else None,
                )
            )
    return StatTable(rows=rows)


def flows(records: Sequence[RunRecord], points: int) -> list[FlowPoint]:
    """Mean gap between each variant's best-so-far depth and the replication's best depth.

    Gaps are averaged over replications at geometric evaluation checkpoints;
    checkpoints before a variant's first evaluation are skipped.
    """
    out: list[FlowPoint] = []
    for cell, recs in _group(records).items():
        variants, reps, mat = _cell_matrix(recs)
        row_min = np.where(np.isnan(mat), np.inf, mat).min(axis=1)
        rep_index = {rep: i for i, rep in enumerate(reps)}
        budget = recs[0].cell.budget
        checkpoints = geometric_checkpoints(budget, points)
        for name in variants:
            mine = [r for r in recs if r.variant == name and r.result is not None]
            if not mine:
                continue
            for k in checkpoints:
                gaps = [
                    r.result.best_at(k) - row_min[rep_index[r.replication]]
                    for r in mine
                    if not math.isnan(r.result.best_at(k))
                ]
                if gaps:
                    gap = float(np.mean(gaps))
                    out.append(FlowPoint(cell=cell, algorithm=name, eval_index=k, mean_gap=gap))
    return out
