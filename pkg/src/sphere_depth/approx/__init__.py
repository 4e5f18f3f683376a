"""Budgeted minimization of the projected depth over the unit sphere."""

from sphere_depth.approx.annealing import simulated_annealing, temperature_levels
from sphere_depth.approx.descent import (
    coordinate_descent,
    great_semicircle,
    line_search_golden,
    line_search_uniform,
    normalized_line,
)
from sphere_depth.approx.engine import ALGORITHMS, approximate, approximate_many
from sphere_depth.approx.models import (
    Algorithm,
    AnnealingParams,
    ApproxConfig,
    ApproxResult,
    DescentParams,
    LineSearch,
    NelderMeadParams,
    RefinementParams,
    SimplicesParams,
    Space,
    Start,
)
from sphere_depth.approx.nelder_mead import nelder_mead
from sphere_depth.approx.objective import DepthObjective
from sphere_depth.approx.search import (
    grid_search,
    random_search,
    random_simplices,
    refined_grid_search,
    refined_random_search,
)

__all__ = [
    "ALGORITHMS",
    "Algorithm",
    "AnnealingParams",
    "ApproxConfig",
    "ApproxResult",
    "DepthObjective",
    "DescentParams",
    "LineSearch",
    "NelderMeadParams",
    "RefinementParams",
    "SimplicesParams",
    "Space",
    "Start",
    "approximate",
    "approximate_many",
    "coordinate_descent",
    "great_semicircle",
    "grid_search",
    "line_search_golden",
    "line_search_uniform",
    "nelder_mead",
    "normalized_line",
    "random_search",
    "random_simplices",
    "refined_grid_search",
    "refined_random_search",
    "simulated_annealing",
    "temperature_levels",
]
