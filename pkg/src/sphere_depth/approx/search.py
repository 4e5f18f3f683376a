"""Sampling-based searches: random, grid, their refined variants, and random simplices."""

from __future__ import annotations

import logging
import math

import numpy as np

from sphere_depth.approx.models import ApproxConfig
from sphere_depth.approx.objective import ZERO_DIRECTION_TOL, DepthObjective
from sphere_depth.errors import DataTooSmall
from sphere_depth.geometry import spherical_cap_grid, spherical_grid, unit
from sphere_depth.rand import (
    RngStream,
    rnd_dirichlet_sym,
    rnd_sphere,
    rnd_spherical_cap,
    rnd_subset,
)

logger = logging.getLogger(__name__)

# skipped zero-length simplex directions allowed per unit of budget
SKIP_GUARD_FACTOR = 100


def random_search(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream) -> None:
    for _ in range(objective.budget):
        objective.evaluate(rnd_sphere(objective.d, rng))


def grid_search(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream | None) -> None:
    grid = spherical_grid(objective.d, objective.budget)
    logger.debug("grid search over %d directions (d=%d)", grid.shape[0], objective.d)
    for p in grid:
        objective.evaluate(p)


def _rounds(cfg: ApproxConfig) -> tuple[int, int]:
    n_ref = cfg.refinement.n_ref
    return n_ref, max(1, cfg.budget // n_ref)


def refined_random_search(
    objective: DepthObjective, cfg: ApproxConfig, rng: RngStream
) -> None:
    """Cap draws around the incumbent; the cap shrinks geometrically once per round."""
    n_ref, n_it = _rounds(cfg)
    objective.evaluate(unit(objective.d))
    eps = math.pi / 2
    for _ in range(n_ref):
        for _ in range(n_it):
            objective.evaluate(rnd_spherical_cap(objective.incumbent(), eps, rng))
        eps *= cfg.refinement.shrink


def refined_grid_search(
    objective: DepthObjective, cfg: ApproxConfig, rng: RngStream | None
) -> None:
    """Deterministic cap grids around the incumbent of each round, shrinking like RRS."""
    n_ref, per_round = _rounds(cfg)
    eps = math.pi / 2
    start = unit(objective.d)
    grid = spherical_cap_grid(start, eps, per_round)
    logger.debug("refined grid search: %d rounds of %d points", n_ref, grid.shape[0])
    objective.evaluate(start)
    for round_idx in range(n_ref):
        if round_idx > 0:
            grid = spherical_cap_grid(objective.incumbent(), eps, per_round)
        for p in grid:
            objective.evaluate(p)
        eps *= cfg.refinement.shrink


def random_simplices(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream) -> None:
    """Directions from a random data simplex: a Dirichlet-weighted facet point minus a vertex.

    Draws whose direction vanishes are skipped without spending budget.
    """
    n, d = objective.n, objective.d
    if n < d + 1:
        raise DataTooSmall(f"random simplices need n >= d + 1 points, got n={n}, d={d}")
    alpha = cfg.simplices.alpha
    skips = 0
    skip_limit = SKIP_GUARD_FACTOR * objective.budget
    while objective.remaining > 0:
        idx = rnd_subset(d + 1, n, rng)
        weights = rnd_dirichlet_sym(d, alpha, rng)
        p = weights @ objective.X[idx[1:]] - objective.X[idx[0]]
        norm = float(np.linalg.norm(p))
        if norm < ZERO_DIRECTION_TOL:
            skips += 1
            if skips > skip_limit:
                logger.warning(
                    "random simplices gave up after %d degenerate draws (%d evaluations left)",
                    skips,
                    objective.remaining,
                )
                return
            continue
        objective.evaluate(p / norm)
