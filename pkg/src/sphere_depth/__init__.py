"""Approximate projection-property data depths by minimizing over the unit sphere."""

from sphere_depth.approx import (
    Algorithm,
    ApproxConfig,
    ApproxResult,
    approximate,
    approximate_many,
)
from sphere_depth.bench import (
    AlgorithmVariant,
    DistributionSpec,
    ExperimentConfig,
    ExperimentResult,
    StatTable,
    ave_rank,
    error_stats,
    generate_sample,
    landscape,
    load_experiment_file,
    perc_best,
    pick_z,
    run_experiment,
)
from sphere_depth.depths import (
    DepthNotion,
    exact_depth,
    exact_halfspace_2d,
    exact_mahalanobis,
    exact_zonoid,
    projected_depth,
)
from sphere_depth.errors import (
    BudgetExhausted,
    ConfigError,
    DataFormatError,
    DataTooSmall,
    DegenerateGeodesic,
    DegenerateMean,
    DimensionMismatch,
    ExactNonPositive,
    GridTooCoarse,
    LpNumericalFailure,
    SingularCovariance,
    SphereDepthError,
    UnsupportedExact,
    log_and_return_error,
)
from sphere_depth.rand import make_stream
from sphere_depth.telemetry import (
    InMemoryTelemetrySink,
    LoggerTelemetrySink,
    NoOpTelemetrySink,
    TelemetryEvent,
    TelemetrySink,
)

__all__ = [
    "Algorithm",
    "AlgorithmVariant",
    "ApproxConfig",
    "ApproxResult",
    "BudgetExhausted",
    "ConfigError",
    "DataFormatError",
    "DataTooSmall",
    "DegenerateGeodesic",
    "DegenerateMean",
    "DepthNotion",
    "DimensionMismatch",
    "DistributionSpec",
    "ExactNonPositive",
    "ExperimentConfig",
    "ExperimentResult",
    "GridTooCoarse",
    "InMemoryTelemetrySink",
    "LoggerTelemetrySink",
    "LpNumericalFailure",
    "NoOpTelemetrySink",
    "SingularCovariance",
    "SphereDepthError",
    "StatTable",
    "TelemetryEvent",
    "TelemetrySink",
    "UnsupportedExact",
    "approximate",
    "approximate_many",
    "ave_rank",
    "error_stats",
    "exact_depth",
    "exact_halfspace_2d",
    "exact_mahalanobis",
    "exact_zonoid",
    "generate_sample",
    "landscape",
    "load_experiment_file",
    "log_and_return_error",
    "make_stream",
    "perc_best",
    "pick_z",
    "projected_depth",
    "run_experiment",
]
try:
    from importlib.metadata import version as _pkg_version

    __version__ = _pkg_version("sphere-depth")
except Exception:
    __version__ = "0.1.0"
