"""Seeded random sources on the sphere, the simplex and index sets.

Every sampler draws from a caller-owned :class:`numpy.random.Generator`
(PCG64). Independent, reproducible streams come from :func:`make_stream`,
which derives the generator from ``SeedSequence(seed, spawn_key=key)`` so a
(seed, key) pair always yields the same sequence regardless of the order in
which streams are created.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike

from sphere_depth.geometry import FloatArray, as_vector, householder_apply

RngStream = np.random.Generator


def make_stream(seed: int, *key: int) -> RngStream:
    """Generator for the stream ``key`` (e.g. replication, algorithm) of ``seed``."""
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def rnd_sphere(d: int, rng: RngStream) -> FloatArray:
    """Uniform direction on S^{d-1}: normalized standard normal vector."""
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    while True:
        x = rng.standard_normal(d)
        norm = float(np.linalg.norm(x))
        if norm > 0.0:
            return x / norm


def rnd_spherical_cap(p: ArrayLike, eps: float, rng: RngStream) -> FloatArray:
    """Direction in the cap B(p, eps) whose distance to p is uniform on [0, eps]."""
    p = as_vector(p)
    if not 0.0 < eps <= math.pi / 2 + 1e-12:
        raise ValueError(f"cap radius must lie in (0, pi/2], got {eps}")
    phi = eps * rng.random()
    x = np.empty(p.size)
    x[0] = math.cos(phi)
    x[1:] = math.sin(phi) * rnd_sphere(p.size - 1, rng)
    return householder_apply(x, p)


def rnd_dirichlet_sym(d: int, alpha: float, rng: RngStream) -> FloatArray:
    """Weights from the symmetric Dirichlet distribution with concentration ``alpha``."""
    if d < 1:
        raise ValueError(f"count must be positive, got {d}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if d == 1:
        return np.ones(1)
    return rng.dirichlet(np.full(d, alpha))


def rnd_subset(k: int, n: int, rng: RngStream) -> np.ndarray:
    """``k`` distinct indices from ``range(n)``, uniform over k-subsets, in draw order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return rng.choice(n, size=k, replace=False)
