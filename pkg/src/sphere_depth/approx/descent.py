"""Coordinate descent on the sphere (great semicircles) and in R^d, with two line searches."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from sphere_depth.approx.models import ApproxConfig, LineSearch, Space
from sphere_depth.approx.objective import ZERO_DIRECTION_TOL, DepthObjective
from sphere_depth.geometry import FloatArray, tangent_frame_direction, unit
from sphere_depth.rand import RngStream, rnd_sphere

GOLDEN_RATIO = (math.sqrt(5.0) - 1.0) / 2.0

# lambda -> direction on the sphere, or None where the curve leaves it undefined
Curve = Callable[[float], FloatArray | None]


class _LineBest:
    def __init__(self, objective: DepthObjective, incumbent: tuple[FloatArray, float]) -> None:
        self.objective = objective
        self.direction, self.value = incumbent

    def probe(self, curve: Curve, lam: float) -> float:
        p = curve(lam)
        if p is None:
            return math.inf
        value = self.objective.evaluate(p)
        if value < self.value:
            self.direction, self.value = p, value
        return value


def line_search_uniform(
    objective: DepthObjective,
    curve: Curve,
    lo: float,
    hi: float,
    n_ls: int,
    incumbent: tuple[FloatArray, float],
) -> tuple[FloatArray, float]:
    """Evaluate ``n_ls + 1`` equispaced parameters in ``[lo, hi]``; keep the best point."""
    best = _LineBest(objective, incumbent)
    for i in range(n_ls + 1):
        best.probe(curve, lo + (hi - lo) * i / n_ls)
    return best.direction, best.value


def line_search_golden(
    objective: DepthObjective,
    curve: Curve,
    lo: float,
    hi: float,
    tol: float,
    incumbent: tuple[FloatArray, float],
) -> tuple[FloatArray, float]:
    """Golden-section search on ``[lo, hi]`` until the bracket is at most ``tol`` wide.

    Returns the best point seen, which is the incumbent if nothing probed beats it.
    """
    best = _LineBest(objective, incumbent)
    a, b = lo, hi
    lam = GOLDEN_RATIO * a + (1.0 - GOLDEN_RATIO) * b
    mu = (1.0 - GOLDEN_RATIO) * a + GOLDEN_RATIO * b
    f_lam = best.probe(curve, lam)
    f_mu = best.probe(curve, mu)
    while b - a > tol:
        if f_lam > f_mu:
            a, lam, f_lam = lam, mu, f_mu
            mu = (1.0 - GOLDEN_RATIO) * a + GOLDEN_RATIO * b
            f_mu = best.probe(curve, mu)
        else:
            b, mu, f_mu = mu, lam, f_lam
            lam = GOLDEN_RATIO * a + (1.0 - GOLDEN_RATIO) * b
            f_lam = best.probe(curve, lam)
    return best.direction, best.value


def great_semicircle(u: FloatArray, p: FloatArray) -> Curve:
    """``lambda -> cos(lambda) u + sin(lambda) p`` for a unit tangent p at u."""
    return lambda lam: math.cos(lam) * u + math.sin(lam) * p


def normalized_line(x: FloatArray, e: FloatArray) -> Curve:
    """``lambda -> (x + lambda e) / |x + lambda e|``, undefined where the line hits 0."""

    def curve(lam: float) -> FloatArray | None:
        y = x + lam * e
        norm = float(np.linalg.norm(y))
        if norm < ZERO_DIRECTION_TOL:
            return None
        return y / norm

    return curve


def _line_search(
    objective: DepthObjective,
    cfg: ApproxConfig,
    curve: Curve,
    lo: float,
    hi: float,
    incumbent: tuple[FloatArray, float],
) -> tuple[FloatArray, float]:
    params = cfg.descent
    if params.line_search is LineSearch.UNIFORM:
        return line_search_uniform(objective, curve, lo, hi, params.n_ls, incumbent)
    return line_search_golden(objective, curve, lo, hi, params.golden_tol, incumbent)


def coordinate_descent(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream) -> None:
    """Sweeps of line searches until the budget runs out.

    On the sphere each sweep follows the d - 1 great semicircles spanned by the
    tangent frame at the sweep's start; in R^d it follows the coordinate axes.
    """
    d = objective.d
    current = rnd_sphere(d, rng)
    value = objective.evaluate(current)
    if cfg.descent.space is Space.SPHERE:
        half = math.pi / 2
        while True:
            anchor = current
            for j in range(d - 1):
                curve = great_semicircle(current, tangent_frame_direction(anchor, j))
                current, value = _line_search(
                    objective, cfg, curve, -half, half, (current, value)
                )
    else:
        span = cfg.descent.euclidean_span
        while True:
            for j in range(d):
                curve = normalized_line(current, unit(d, j))
                current, value = _line_search(
                    objective, cfg, curve, -span, span, (current, value)
                )
