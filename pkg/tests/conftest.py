"""Test helpers for sphere_depth tests."""

from __future__ import annotations

import numpy as np

from sphere_depth.rand import RngStream, make_stream


def make_rng(seed: int = 0, *key: int) -> RngStream:
    return make_stream(seed, *key)


def make_cross_data() -> np.ndarray:
    """The four points (+-1, 0), (0, +-1).

    The halfspace depth of the origin is 1/2, and every direction off the two
    axes attains it.
    """
    return np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])


def make_cross_data_3d() -> np.ndarray:
    """Symmetric cross in R^3: the six points +-e_i."""
    eye = np.eye(3)
    return np.vstack([eye, -eye])


def make_normal_sample(n: int = 100, d: int = 3, seed: int = 0) -> np.ndarray:
    return make_stream(seed, 99).standard_normal((n, d))
