"""Experiment runner: every variant on the same (dataset, z) per cell and replication."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from sphere_depth.approx import approximate
from sphere_depth.bench.models import Cell, ExperimentConfig, RunRecord
from sphere_depth.bench.sampling import generate_sample, pick_z
from sphere_depth.bench.stats import FlowPoint, StatTable, flows, summarize
from sphere_depth.depths import exact_depth, has_oracle
from sphere_depth.errors import GridTooCoarse, SphereDepthError
from sphere_depth.geometry import FloatArray
from sphere_depth.rand import make_stream
from sphere_depth.telemetry import NoOpTelemetrySink, TelemetryEvent, TelemetrySink

logger = logging.getLogger(__name__)

DATA_STREAM = 0


@dataclass(frozen=True)
class ExperimentResult:
    records: list[RunRecord]
    table: StatTable
    flows: list[FlowPoint]


def _exact(cell: Cell, z: FloatArray, X: FloatArray) -> float | None:
    if not has_oracle(cell.notion, cell.d):
        return None
    try:
        return exact_depth(cell.notion, z, X)
    except SphereDepthError as exc:
        logger.warning("exact %s depth unavailable in %s: %s", cell.notion.value, cell.key, exc)
        return None


def run_replication(
    cfg: ExperimentConfig, cell_index: int, cell: Cell, replication: int
) -> list[RunRecord]:
    """One dataset and query point, then every variant on them.

    Streams are keyed by (cell, replication, slot): slot 0 draws the data and
    slot ``1 + i`` drives variant i, so the outcome does not depend on scheduling.
    """
    data_rng = make_stream(cfg.seed, cell_index, replication, DATA_STREAM)
    X = generate_sample(cell.distribution, cfg.n, data_rng)
    z = pick_z(X, data_rng)
    exact = _exact(cell, z, X)

    records: list[RunRecord] = []
    for slot, variant in enumerate(cfg.variants, start=1):
        rng = make_stream(cfg.seed, cell_index, replication, slot)
        approx_cfg = variant.to_config(cell.budget)
        started = time.perf_counter()
        try:
            result = approximate(cell.notion, z, X, approx_cfg, rng)
        except GridTooCoarse as exc:
            logger.warning("%s skipped in %s: %s", variant.name, cell.key, exc)
            records.append(
                RunRecord(
                    cell=cell,
                    replication=replication,
                    variant=variant.name,
                    n=cfg.n,
                    seed=cfg.seed,
                    value=math.nan,
                    exact=exact,
                    evals=0,
                    time_ms=None,
                )
            )
            continue
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        records.append(
            RunRecord(
                cell=cell,
                replication=replication,
                variant=variant.name,
                n=cfg.n,
                seed=cfg.seed,
                value=result.value,
                exact=exact,
                evals=result.evals_used,
                time_ms=elapsed_ms if cfg.record_timing else None,
                result=result,
            )
        )
    return records


def run_experiment(
    cfg: ExperimentConfig,
    *,
    threads: int = 1,
    telemetry: TelemetrySink | None = None,
) -> ExperimentResult:
    """Run all cells and replications, then aggregate.

    Work units are (cell, replication) pairs. With ``threads > 1`` they run on a
    thread pool; results are collected in unit order, so raw records are the
    same for any thread count.
    """
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    sink = telemetry or NoOpTelemetrySink()
    cells = cfg.cells()
    units = [(i, cell, rep) for i, cell in enumerate(cells) for rep in range(cfg.replications)]
    logger.info(
        "running %d cells x %d replications x %d variants on %d thread(s)",
        len(cells),
        cfg.replications,
        len(cfg.variants),
        threads,
    )

    def work(unit: tuple[int, Cell, int]) -> list[RunRecord]:
        return run_replication(cfg, *unit)

    if threads == 1:
        batches = [work(u) for u in units]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(work, units))

    records: list[RunRecord] = []
    for (cell_index, cell, rep), batch in zip(units, batches):
        for rec in batch:
            sink.emit(
                TelemetryEvent(
                    name="approx_run",
                    attributes={
                        "cell": cell.key,
                        "replication": rep,
                        "variant": rec.variant,
                        "value": rec.value,
                        "evals": rec.evals,
                        "missing": rec.missing,
                    },
                )
            )
        records.extend(batch)
        if rep == cfg.replications - 1:
            sink.emit(
                TelemetryEvent(
                    name="cell_done",
                    attributes={"cell": cell.key, "index": cell_index},
                )
            )

    return ExperimentResult(
        records=records,
        table=summarize(records),
        flows=flows(records, cfg.flow_points),
    )
