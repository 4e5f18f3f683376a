from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from sphere_depth.approx.annealing import simulated_annealing
from sphere_depth.approx.descent import coordinate_descent
from sphere_depth.approx.models import Algorithm, ApproxConfig, ApproxResult
from sphere_depth.approx.nelder_mead import nelder_mead
from sphere_depth.approx.objective import DepthObjective
from sphere_depth.approx.search import (
    grid_search,
    random_search,
    random_simplices,
    refined_grid_search,
    refined_random_search,
)
from sphere_depth.depths import DepthNotion, as_dataset, as_point
from sphere_depth.errors import BudgetExhausted
from sphere_depth.geometry import unit
from sphere_depth.rand import RngStream

logger = logging.getLogger(__name__)

Runner = Callable[[DepthObjective, ApproxConfig, RngStream], None]

ALGORITHMS: dict[Algorithm, Runner] = {
    Algorithm.RS: random_search,
    Algorithm.GS: grid_search,
    Algorithm.RRS: refined_random_search,
    Algorithm.RGS: refined_grid_search,
    Algorithm.RASI: random_simplices,
    Algorithm.SA: simulated_annealing,
    Algorithm.CD: coordinate_descent,
    Algorithm.NM: nelder_mead,
}

DETERMINISTIC = frozenset({Algorithm.GS, Algorithm.RGS})


def approximate(
    notion: DepthNotion | str,
    z: ArrayLike,
    X: ArrayLike,
    cfg: ApproxConfig,
    rng: RngStream | None = None,
) -> ApproxResult:
    """Upper bound on the depth of z w.r.t. X from ``cfg.budget`` projected depths.

    ``rng`` may be omitted only for the grid searches, which draw nothing. With
    d = 1 the kernels are reflection invariant, so the single direction e1 is exact.
    """
    data = as_dataset(X)
    point = as_point(z, data.shape[1])
    algorithm = Algorithm(cfg.algorithm)
    if rng is None and algorithm not in DETERMINISTIC:
        raise ValueError(f"{algorithm.value} needs a random stream")

    objective = DepthObjective(
        DepthNotion(notion), point, data, cfg.budget, record_history=cfg.record_history
    )
    try:
        if objective.d == 1:
            objective.evaluate(unit(1))
        else:
            ALGORITHMS[algorithm](objective, cfg, rng)
    except BudgetExhausted:
        pass
    if not objective.trace:
        logger.warning("%s finished without evaluating any direction", cfg.name)
    logger.debug(
        "%s: depth %.6g after %d/%d evaluations",
        cfg.name,
        objective.best_value,
        objective.counter.used,
        cfg.budget,
    )
    return objective.result(cfg.name)


def approximate_many(
    notion: DepthNotion | str,
    Z: ArrayLike,
    X: ArrayLike,
    cfg: ApproxConfig,
    rng: RngStream | None = None,
) -> list[ApproxResult]:
    """Depth of every row of Z, each with a fresh budget, drawing from ``rng`` in turn."""
    data = as_dataset(X)
    points = np.atleast_2d(np.asarray(Z, dtype=np.float64))
    return [approximate(notion, z, data, cfg, rng) for z in points]
