"""Nelder-Mead on the sphere (moves along great circles) and the classical Euclidean variant."""

from __future__ import annotations

import bisect
import logging
import math
from operator import itemgetter

import numpy as np
from scipy.optimize import minimize

from sphere_depth.approx.models import ApproxConfig, NelderMeadParams, Space
from sphere_depth.approx.objective import ZERO_DIRECTION_TOL, DepthObjective
from sphere_depth.errors import DegenerateGeodesic, DegenerateMean
from sphere_depth.geometry import FloatArray, great_circle_point, naive_mean
from sphere_depth.rand import RngStream, rnd_spherical_cap

logger = logging.getLogger(__name__)

Vertex = tuple[float, FloatArray]
_value = itemgetter(0)


def _spawn_simplex(
    objective: DepthObjective, center: FloatArray, eps: float, rng: RngStream
) -> list[Vertex]:
    simplex = []
    for _ in range(objective.d):
        p = rnd_spherical_cap(center, eps, rng)
        simplex.append((objective.evaluate(p), p))
    simplex.sort(key=_value)
    return simplex


def _step(objective: DepthObjective, simplex: list[Vertex], params: NelderMeadParams) -> None:
    """One reflect / expand / contract / shrink move; ``simplex`` stays sorted by value."""
    bound = params.bound
    f_best = simplex[0][0]
    f_second_worst = simplex[-2][0]
    f_worst, worst = simplex[-1]
    centroid = naive_mean([p for _, p in simplex[:-1]])

    reflected = great_circle_point(centroid, worst, -params.reflection, bound)
    f_reflected = objective.evaluate(reflected)
    if f_best <= f_reflected < f_second_worst:
        replacement = (f_reflected, reflected)
    elif f_reflected < f_best:
        expanded = great_circle_point(centroid, reflected, params.expansion, bound)
        f_expanded = objective.evaluate(expanded)
        if f_expanded < f_reflected:
            replacement = (f_expanded, expanded)
        else:
            replacement = (f_reflected, reflected)
    else:
        # outside contraction toward the reflected point when it beats the worst vertex
        target = reflected if f_reflected < f_worst else worst
        contracted = great_circle_point(centroid, target, params.contraction, bound)
        f_contracted = objective.evaluate(contracted)
        if f_contracted < f_worst:
            replacement = (f_contracted, contracted)
        else:
            best = simplex[0][1]
            shrunk = [simplex[0]]
            for _, p in simplex[1:]:
                q = great_circle_point(best, p, params.shrink, bound)
                shrunk.append((objective.evaluate(q), q))
            shrunk.sort(key=_value)
            simplex[:] = shrunk
            return
    simplex.pop()
    bisect.insort(simplex, replacement, key=_value)


def _spherical_nelder_mead(
    objective: DepthObjective, params: NelderMeadParams, rng: RngStream
) -> None:
    eps = (math.pi / 2) / params.cap_divisor
    simplex = _spawn_simplex(objective, objective.start_direction(params.start, rng), eps, rng)
    while True:
        try:
            _step(objective, simplex, params)
        except (DegenerateMean, DegenerateGeodesic) as exc:
            logger.debug("restarting spherical simplex around the incumbent: %s", exc)
            simplex = _spawn_simplex(objective, objective.incumbent(), eps, rng)


def _euclidean_nelder_mead(
    objective: DepthObjective, params: NelderMeadParams, rng: RngStream
) -> None:
    eps = (math.pi / 2) / params.cap_divisor
    d = objective.d

    def fun(x: FloatArray) -> float:
        norm = float(np.linalg.norm(x))
        if norm < ZERO_DIRECTION_TOL:
            return 1.0
        return objective.evaluate(x / norm)

    center = objective.start_direction(params.start, rng)
    while True:
        start = np.vstack([rnd_spherical_cap(center, eps, rng) for _ in range(d + 1)])
        minimize(
            fun,
            start[0],
            method="Nelder-Mead",
            options={
                "initial_simplex": start,
                "maxfev": objective.remaining + 1,
                "xatol": 0.0,
                "fatol": 0.0,
                "adaptive": False,
            },
        )
        # converged before the budget ran out: restart around the best direction
        center = objective.incumbent()


def nelder_mead(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream) -> None:
    params = cfg.nelder_mead
    if params.space is Space.SPHERE:
        _spherical_nelder_mead(objective, params, rng)
    else:
        _euclidean_nelder_mead(objective, params, rng)
