"""Exact depths used as reference values: Mahalanobis, zonoid (LP), bivariate halfspace."""

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike
from scipy import sparse
from scipy.optimize import linprog

from sphere_depth.depths.kernels import DepthNotion, UnivariateSample, hd1
from sphere_depth.depths.objective import as_dataset, as_point
from sphere_depth.errors import (
    DimensionMismatch,
    LpNumericalFailure,
    SingularCovariance,
    UnsupportedExact,
)

logger = logging.getLogger(__name__)

MAX_CONDITION = 1e12
LP_TOLERANCE = 1e-10

_LP_OPTIMAL = 0
_LP_INFEASIBLE = 2


def exact_mahalanobis(z: ArrayLike, X: ArrayLike) -> float:
    """``(1 + (z - mean)^T S^{-1} (z - mean))^{-1}`` with the divisor-n covariance S."""
    data = as_dataset(X)
    point = as_point(z, data.shape[1])
    center = data.mean(axis=0)
    centered = data - center
    cov = centered.T @ centered / data.shape[0]
    if not np.all(np.isfinite(cov)) or np.linalg.cond(cov) > MAX_CONDITION:
        raise SingularCovariance("sample covariance matrix is singular or ill-conditioned")
    try:
        factor = scipy.linalg.cho_factor(cov)
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance("sample covariance matrix is not positive definite") from exc
    diff = point - center
    quad = float(diff @ scipy.linalg.cho_solve(factor, diff))
    return 1.0 / (1.0 + quad)


def exact_zonoid(z: ArrayLike, X: ArrayLike) -> float:
    """Zonoid depth as ``1 / (n t*)`` where t* is the optimum of

    minimize t  s.t.  sum(lambda) = 1,  X^T lambda = z,  0 <= lambda_i <= t.

    An infeasible program means z lies outside the convex hull: depth 0.
    """
    data = as_dataset(X)
    n, d = data.shape
    point = as_point(z, d)

    cost = np.zeros(n + 1)
    cost[-1] = 1.0
    a_eq = np.zeros((d + 1, n + 1))
    a_eq[:d, :n] = data.T
    a_eq[d, :n] = 1.0
    b_eq = np.append(point, 1.0)
    a_ub = sparse.hstack(
        [sparse.identity(n, format="csr"), sparse.csr_matrix(-np.ones((n, 1)))],
        format="csr",
    )
    res = linprog(
        cost,
        A_ub=a_ub,
        b_ub=np.zeros(n),
        A_eq=a_eq,
        b_eq=b_eq,
        bounds=[(0.0, None)] * (n + 1),
        method="highs",
        options={
            "primal_feasibility_tolerance": LP_TOLERANCE,
            "dual_feasibility_tolerance": LP_TOLERANCE,
        },
    )
    if res.status == _LP_INFEASIBLE:
        logger.debug("zonoid LP infeasible: point lies outside the convex hull")
        return 0.0
    if res.status != _LP_OPTIMAL or res.x is None:
        raise LpNumericalFailure(f"zonoid LP failed (status {res.status}): {res.message}")
    t_star = float(res.x[-1])
    if t_star <= 0.0:
        raise LpNumericalFailure(f"zonoid LP returned a non-positive optimum {t_star}")
    return min(1.0, 1.0 / (n * t_star))


def _cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def exact_halfspace_2d(z: ArrayLike, X: ArrayLike) -> float:
    """Tukey depth in the plane by an angular sweep around z, O(n log n).

    The depth is the smallest share of points in a closed half-plane whose
    boundary passes through z, i.e. everything except the largest open
    half-circle of directions. Points equal to z lie in every half-plane.
    """
    data = as_dataset(X)
    if data.shape[1] != 2:
        raise DimensionMismatch(f"exact_halfspace_2d needs d = 2, got d = {data.shape[1]}")
    point = as_point(z, 2)
    n = data.shape[0]
    diff = data - point
    at_z = np.all(diff == 0.0, axis=1)
    rest = diff[~at_z]
    m = rest.shape[0]
    if m == 0:
        return 1.0

    order = np.argsort(np.arctan2(rest[:, 1], rest[:, 0]), kind="stable")
    vx = rest[order, 0].tolist()
    vy = rest[order, 1].tolist()

    def in_half_open_arc(i: int, j: int) -> bool:
        # angle of v_j measured from v_i lies in [0, pi)
        c = _cross(vx[i], vy[i], vx[j], vy[j])
        if c > 0.0:
            return True
        return c == 0.0 and vx[i] * vx[j] + vy[i] * vy[j] > 0.0

    best_open = 0
    end = 0
    for i in range(m):
        end = max(end, i + 1)
        while end < i + m and in_half_open_arc(i, end % m):
            end += 1
        best_open = max(best_open, end - i)

    closed_min = int(np.count_nonzero(at_z)) + m - best_open
    return closed_min / n


def exact_depth(notion: DepthNotion, z: ArrayLike, X: ArrayLike) -> float:
    """Exact depth where an oracle exists; ``UnsupportedExact`` otherwise."""
    notion = DepthNotion(notion)
    data = as_dataset(X)
    if notion is DepthNotion.MAHALANOBIS:
        return exact_mahalanobis(z, data)
    if notion is DepthNotion.ZONOID:
        return exact_zonoid(z, data)
    if notion is DepthNotion.HALFSPACE:
        if data.shape[1] == 1:
            return hd1(float(as_point(z, 1)[0]), UnivariateSample.of(data[:, 0]))
        if data.shape[1] == 2:
            return exact_halfspace_2d(z, data)
        raise UnsupportedExact(
            f"exact halfspace depth is only available for d <= 2 (got d = {data.shape[1]})"
        )
    raise UnsupportedExact(f"no exact algorithm for {notion.value} depth")


def has_oracle(notion: DepthNotion, d: int) -> bool:
    notion = DepthNotion(notion)
    if notion is DepthNotion.HALFSPACE:
        return d <= 2
    return notion in (DepthNotion.MAHALANOBIS, DepthNotion.ZONOID)

