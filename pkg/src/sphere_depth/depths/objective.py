"""The objective p -> D(<p, z> | <p, X>) and its evaluation budget."""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from sphere_depth.depths.kernels import KERNELS, DepthNotion, UnivariateSample
from sphere_depth.errors import BudgetExhausted, DimensionMismatch
from sphere_depth.geometry import FloatArray, as_vector


def as_dataset(X: ArrayLike) -> FloatArray:
    """Validate a sample as an n x d float matrix (a flat array is read as n x 1)."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"dataset must be an n x d matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("dataset contains non-finite entries")
    return arr


def as_point(z: ArrayLike, d: int) -> FloatArray:
    point = as_vector(z)
    if point.size != d:
        raise DimensionMismatch(f"point has dimension {point.size}, dataset has {d}")
    if not np.all(np.isfinite(point)):
        raise ValueError("point contains non-finite entries")
    return point


def project(X: FloatArray, p: FloatArray) -> UnivariateSample:
    if X.shape[1] != p.size:
        raise DimensionMismatch(f"dataset has dimension {X.shape[1]}, direction {p.size}")
    return UnivariateSample(X @ p)


def project_point(z: FloatArray, p: FloatArray) -> float:
    if z.size != p.size:
        raise DimensionMismatch(f"point has dimension {z.size}, direction {p.size}")
    return float(z @ p)


@dataclass
class EvalCounter:
    """Budget of univariate depth evaluations. Single-owner, one per optimization run."""

    limit: int
    used: int = 0

    def __post_init__(self) -> None:
        if self.limit < 0:
            raise ValueError(f"evaluation limit must be non-negative, got {self.limit}")

    @classmethod
    def unlimited(cls) -> EvalCounter:
        return cls(limit=sys.maxsize)

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def consume(self) -> None:
        if self.used >= self.limit:
            raise BudgetExhausted(f"evaluation budget of {self.limit} used up")
        self.used += 1


def center_on(X: FloatArray, z: FloatArray) -> FloatArray:
    """Sample translated so that ``z`` is the origin; rows equal to ``z`` become exact zeros."""
    if X.shape[1] != z.size:
        raise DimensionMismatch(f"point has dimension {z.size}, dataset has {X.shape[1]}")
    return X - z


def centered_depth(
    notion: DepthNotion, centered: FloatArray, p: FloatArray, counter: EvalCounter
) -> float:
    """Depth of the origin w.r.t. ``<p, centered>``, charging one evaluation to ``counter``."""
    counter.consume()
    return KERNELS[DepthNotion(notion)](0.0, project(centered, p))


def projected_depth(
    notion: DepthNotion,
    z: FloatArray,
    X: FloatArray,
    p: FloatArray,
    counter: EvalCounter,
) -> float:
    """Univariate depth of the projected point w.r.t. the projected sample.

    The sample is centered on ``z`` before projecting, so zeta is 0 and every row
    equal to ``z`` projects to exactly 0. Charges exactly one evaluation to
    ``counter``; raises ``BudgetExhausted`` when nothing is left.
    """
    return centered_depth(notion, center_on(X, z), p, counter)
