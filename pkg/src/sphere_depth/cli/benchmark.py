"""CLI handler for ``sphere-depth benchmark``."""

from __future__ import annotations

import sys
from argparse import Namespace
from pathlib import Path

from sphere_depth.bench import (
    format_table,
    load_experiment_file,
    run_experiment,
    write_flows_csv,
    write_raw_csv,
    write_stats_csv,
)
from sphere_depth.errors import SphereDepthError, log_and_return_error
from sphere_depth.telemetry import LoggerTelemetrySink, NoOpTelemetrySink


def run_benchmark(args: Namespace) -> None:
    out_dir = Path(args.out)
    try:
        cfg = load_experiment_file(args.config)
        sink = LoggerTelemetrySink() if args.verbose else NoOpTelemetrySink()
        result = run_experiment(cfg, threads=args.threads, telemetry=sink)
        out_dir.mkdir(parents=True, exist_ok=True)
        write_raw_csv(result.records, out_dir / "raw.csv")
        write_stats_csv(result.table, out_dir / "stats.csv")
        write_flows_csv(result.flows, out_dir / "flows.csv")
    except (SphereDepthError, OSError, ValueError) as exc:
        print(
            "Error: "
            + log_and_return_error(command="benchmark", exc=exc, user_message=str(exc)),
            file=sys.stderr,
        )
        sys.exit(1)

    print(format_table(result.table))
    print(f"Results written to {out_dir}")
