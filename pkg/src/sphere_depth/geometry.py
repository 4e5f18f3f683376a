"""Deterministic primitives of the unit sphere S^{d-1}.

Angles between unit vectors always go through the arcsin form
``2 asin(|x - y| / 2)`` (or its antipodal mirror), never ``acos`` of a
dot product close to one.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from sphere_depth.errors import (
    DegenerateGeodesic,
    DegenerateMean,
    DimensionMismatch,
    GridTooCoarse,
)

FloatArray = NDArray[np.float64]

POLE_TOL = 1e-12
FRAME_POLE_TOL = 1e-9
MEAN_TOL = 1e-12


def as_vector(x: ArrayLike) -> FloatArray:
    return np.asarray(x, dtype=np.float64).reshape(-1)


def unit(d: int, i: int = 0) -> FloatArray:
    """The coordinate vector e_i of R^d (0-based)."""
    e = np.zeros(d)
    e[i] = 1.0
    return e


def _check_same_dim(a: FloatArray, b: FloatArray) -> None:
    if a.shape[-1] != b.shape[-1]:
        raise DimensionMismatch(f"dimension mismatch: {a.shape[-1]} vs {b.shape[-1]}")


def _arc(x: FloatArray, y: FloatArray) -> tuple[float, float, float]:
    """Return ``(angle, sin(angle), <x, y>)`` for unit vectors x, y."""
    sp = float(x @ y)
    if sp >= 0.0:
        chord2 = float(np.sum((x - y) ** 2))
        alpha = 2.0 * math.asin(min(1.0, 0.5 * math.sqrt(chord2)))
        sina = math.sqrt(chord2 * (1.0 + sp) / 2.0)
    else:
        chord2 = float(np.sum((x + y) ** 2))
        alpha = math.pi - 2.0 * math.asin(min(1.0, 0.5 * math.sqrt(chord2)))
        sina = math.sqrt(chord2 * (1.0 - sp) / 2.0)
    return alpha, sina, sp


def great_circle_distance(u: ArrayLike, v: ArrayLike) -> float:
    """Length of the shorter great-circle arc between unit vectors u and v, in [0, pi]."""
    u, v = as_vector(u), as_vector(v)
    _check_same_dim(u, v)
    return _arc(u, v)[0]


def householder_apply(x: ArrayLike, p: ArrayLike) -> FloatArray:
    """Apply the reflection Q with ``Q e1 = p`` to x (a vector or a stack of row vectors).

    Q is symmetric and orthogonal, so applying it twice returns x.
    """
    x = np.asarray(x, dtype=np.float64)
    p = as_vector(p)
    _check_same_dim(x, p)
    if abs(p[0] - 1.0) <= POLE_TOL:
        return x.copy()
    lam = (x @ p - x[..., 0]) / (1.0 - p[0])
    out = x - np.multiply.outer(lam, p)
    out[..., 0] += lam
    return out


def great_circle_point(
    x: ArrayLike, y: ArrayLike, t: float, bound: bool = False
) -> FloatArray:
    """The point ``gamma_{x,y}(t)`` on the great circle through x and y.

    ``t = 0`` gives x, ``t = 1`` gives y; other t move proportionally along the arc.
    With ``bound`` the movement from x is limited to a quarter circle.
    """
    x, y = as_vector(x), as_vector(y)
    _check_same_dim(x, y)
    alpha, sina, sp = _arc(x, y)
    if abs(sp) >= 1.0 - POLE_TOL:
        raise DegenerateGeodesic("great circle through (anti)parallel points is undefined")
    gx = (1.0 - t) * alpha
    gy = t * alpha
    if bound and abs(gy) > math.pi / 2:
        gy = math.copysign(math.pi / 2, gy)
        gx = alpha - gy
    return (math.sin(gx) / sina) * x + (math.sin(gy) / sina) * y


def tangent_frame_direction(u: ArrayLike, j: int) -> FloatArray:
    """Column j (0-based, j < d - 1) of the Householder matrix mapping u to e_d.

    The d - 1 columns are orthonormal and orthogonal to u. At the pole
    ``u = e_d`` the analytic limit e_j is returned.
    """
    u = as_vector(u)
    d = u.size
    if not 0 <= j < d - 1:
        raise IndexError(f"tangent direction index {j} out of range for d={d}")
    denom = 1.0 - u[-1]
    if abs(denom) <= FRAME_POLE_TOL:
        return unit(d, j)
    shifted = u.copy()
    shifted[-1] -= 1.0
    p = -(u[j] / denom) * shifted
    p[j] += 1.0
    return p


def tangent_frame(u: ArrayLike) -> FloatArray:
    """All d - 1 tangent directions at u as rows of a (d-1) x d matrix."""
    u = as_vector(u)
    return np.vstack([tangent_frame_direction(u, j) for j in range(u.size - 1)])


def naive_mean(points: Sequence[ArrayLike] | FloatArray) -> FloatArray:
    """Coordinatewise average of sphere points, renormalized to unit length."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if pts.shape[0] == 0:
        raise ValueError("naive_mean needs at least one point")
    avg = pts.mean(axis=0)
    norm = float(np.linalg.norm(avg))
    if norm <= MEAN_TOL:
        raise DegenerateMean("average of the points is the zero vector")
    return avg / norm


def from_spherical(angles: FloatArray) -> FloatArray:
    """Map rows of generalized spherical coordinates (phi_1..phi_{d-1}) to unit vectors."""
    angles = np.atleast_2d(angles)
    m, k = angles.shape
    out = np.empty((m, k + 1))
    sin_prod = np.ones(m)
    for i in range(k):
        out[:, i] = sin_prod * np.cos(angles[:, i])
        sin_prod = sin_prod * np.sin(angles[:, i])
    out[:, k] = sin_prod
    return out


def _grid_side(budget: int, axes: int) -> int:
    """Largest k with ``k ** axes <= budget``, computed in integers."""
    k = max(1, int(round(budget ** (1.0 / axes))))
    while k**axes > budget:
        k -= 1
    while (k + 1) ** axes <= budget:
        k += 1
    return k


def _product_angles(axes: list[FloatArray]) -> FloatArray:
    return np.array(list(itertools.product(*axes)), dtype=np.float64)


def _full_sphere_axes(n_angles: int, k: int) -> list[FloatArray]:
    """Angle axes covering all of S^{n_angles}: bounded angles closed, the last one periodic."""
    bounded = [np.linspace(0.0, math.pi, k)] * (n_angles - 1)
    periodic = 2.0 * math.pi * np.arange(k) / k
    return [*bounded, periodic]


def spherical_grid(d: int, budget: int) -> FloatArray:
    """Deterministic grid of at most ``budget`` directions on the northern hemisphere.

    Rows are unit vectors. For d = 2 one direction per line through the origin.
    """
    if d < 2:
        raise ValueError(f"spherical_grid needs d >= 2, got {d}")
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    if d == 2:
        phi = math.pi * np.arange(budget) / budget
        return np.column_stack([np.cos(phi), np.sin(phi)])
    k = _grid_side(budget, d - 1)
    if k < 2:
        raise GridTooCoarse(f"budget {budget} gives {k} value(s) per angle in dimension {d}")
    polar = np.linspace(0.0, math.pi / 2, k)
    axes = [polar, *_full_sphere_axes(d - 2, k)]
    return from_spherical(_product_angles(axes))


def spherical_cap_grid(p: ArrayLike, eps: float, budget: int) -> FloatArray:
    """Deterministic grid of at most ``budget`` points in the cap B(p, eps), p excluded.

    Polar angles are equispaced in (0, eps]; each polar ring is a full-sphere grid
    of the cross-section S^{d-2}, rotated onto p by the Householder reflection.
    """
    p = as_vector(p)
    d = p.size
    if not 0.0 < eps <= math.pi / 2 + POLE_TOL:
        raise ValueError(f"cap radius must lie in (0, pi/2], got {eps}")
    if d == 2:
        m = budget // 2
        if m < 1:
            raise GridTooCoarse(f"budget {budget} too small for a cap grid in dimension 2")
        polar = eps * np.arange(1, m + 1) / m
        local = np.vstack(
            [
                np.column_stack([np.cos(polar), np.sin(polar)]),
                np.column_stack([np.cos(polar), -np.sin(polar)]),
            ]
        )
        return householder_apply(local, p)
    k = _grid_side(budget, d - 1)
    if k < 2:
        raise GridTooCoarse(f"budget {budget} gives {k} value(s) per angle in dimension {d}")
    polar = eps * np.arange(1, k + 1) / k
    section = from_spherical(_product_angles(_full_sphere_axes(d - 2, k)))
    rings = [
        np.column_stack([np.full(section.shape[0], math.cos(phi)), math.sin(phi) * section])
        for phi in polar
    ]
    return householder_apply(np.vstack(rings), p)
