"""Benchmark data generators and the choice of the query point."""

from __future__ import annotations

import numpy as np
from scipy.special import ndtr

from sphere_depth.bench.models import DistributionSpec, Family
from sphere_depth.geometry import FloatArray
from sphere_depth.rand import RngStream, rnd_subset

QUERY_POOL = 10


def _spherical_t(n: int, d: int, dof: float, rng: RngStream) -> FloatArray:
    z = rng.standard_normal((n, d))
    s = rng.chisquare(dof, size=n)
    return z / np.sqrt(s / dof)[:, None]


def _skew_normal(n: int, skew: FloatArray, rng: RngStream) -> FloatArray:
    # keep Z with probability Phi(<skew, Z>), otherwise flip it
    z = rng.standard_normal((n, skew.size))
    u = rng.random(n)
    flip = u > ndtr(z @ skew)
    z[flip] *= -1.0
    return z


def generate_sample(spec: DistributionSpec, n: int, rng: RngStream) -> FloatArray:
    """``n`` i.i.d. rows from ``spec``; t5 and Cauchy are spherically symmetric."""
    if n < 1:
        raise ValueError(f"sample size must be positive, got {n}")
    d = spec.d
    family = Family(spec.family)
    if family is Family.NORMAL:
        return rng.standard_normal((n, d))
    if family is Family.T5:
        return _spherical_t(n, d, 5.0, rng)
    if family is Family.CAUCHY:
        return _spherical_t(n, d, 1.0, rng)
    if family is Family.SKEW_NORMAL:
        return _skew_normal(n, np.asarray(spec.skew_vector(), dtype=np.float64), rng)
    if family is Family.UNIFORM:
        return rng.random((n, d))
    return rng.standard_exponential((n, d))


def pick_z(X: FloatArray, rng: RngStream) -> FloatArray:
    """Average of ``min(10, n)`` distinct sample rows: inside the hull, not too deep."""
    n = X.shape[0]
    idx = rnd_subset(min(QUERY_POOL, n), n, rng)
    return X[idx].mean(axis=0)
