"""Benchmark data, experiment runner and comparison statistics."""

from sphere_depth.bench.landscape import LandscapePoint, landscape
from sphere_depth.bench.loader import format_validation_error, load_experiment_file
from sphere_depth.bench.models import (
    AlgorithmVariant,
    Cell,
    DistributionChoice,
    DistributionSpec,
    ExperimentConfig,
    Family,
    RunRecord,
)
from sphere_depth.bench.report import (
    format_number,
    format_table,
    write_flows_csv,
    write_raw_csv,
    write_stats_csv,
)
from sphere_depth.bench.runner import ExperimentResult, run_experiment, run_replication
from sphere_depth.bench.sampling import generate_sample, pick_z
from sphere_depth.bench.stats import (
    FlowPoint,
    StatRow,
    StatTable,
    ave_rank,
    error_stats,
    flows,
    geometric_checkpoints,
    perc_best,
    summarize,
)

__all__ = [
    "AlgorithmVariant",
    "Cell",
    "DistributionChoice",
    "DistributionSpec",
    "ExperimentConfig",
    "ExperimentResult",
    "Family",
    "FlowPoint",
    "LandscapePoint",
    "RunRecord",
    "StatRow",
    "StatTable",
    "ave_rank",
    "error_stats",
    "flows",
    "format_number",
    "format_table",
    "format_validation_error",
    "generate_sample",
    "geometric_checkpoints",
    "landscape",
    "load_experiment_file",
    "perc_best",
    "pick_z",
    "run_experiment",
    "run_replication",
    "summarize",
    "write_flows_csv",
    "write_raw_csv",
    "write_stats_csv",
]
