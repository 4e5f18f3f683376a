"""Univariate depth kernels D(zeta | Y) for projected samples.

Every kernel is affine invariant in one dimension (including reflections) and
returns a value in [0, 1]. Degenerate spread (zero variance, zero MAD, no
positive deviations) gives depth 1 at the center and 0 elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from sphere_depth.geometry import FloatArray


class DepthNotion(str, Enum):
    MAHALANOBIS = "mahalanobis"
    ZONOID = "zonoid"
    HALFSPACE = "halfspace"
    PROJECTION = "projection"
    ASYM_PROJECTION = "asym_projection"


@dataclass(frozen=True)
class UnivariateSample:
    """Projected sample ``<p, x_i>`` with lazily computed location and scale."""

    values: FloatArray

    @classmethod
    def of(cls, values: ArrayLike) -> UnivariateSample:
        arr = np.asarray(values, dtype=np.float64).reshape(-1)
        if arr.size == 0:
            raise ValueError("univariate sample must not be empty")
        return cls(arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @cached_property
    def sorted(self) -> FloatArray:
        return np.sort(self.values)

    @cached_property
    def is_constant(self) -> bool:
        return bool(self.sorted[0] == self.sorted[-1])

    @cached_property
    def mean(self) -> float:
        return float(self.values.mean())

    @cached_property
    def variance(self) -> float:
        """Second central moment with divisor n."""
        return float(np.mean((self.values - self.mean) ** 2))

    @cached_property
    def median(self) -> float:
        return float(np.median(self.values))

    @cached_property
    def mad(self) -> float:
        return float(np.median(np.abs(self.values - self.median)))

    @cached_property
    def mad_plus(self) -> float | None:
        """Median of the strictly positive deviations from the median, None if there are none."""
        dev = self.values - self.median
        pos = dev[dev > 0]
        return float(np.median(pos)) if pos.size else None


def md1(zeta: float, sample: UnivariateSample) -> float:
    if sample.is_constant:
        return 1.0 if zeta == sample.sorted[0] else 0.0
    return 1.0 / (1.0 + (zeta - sample.mean) ** 2 / sample.variance)


def hd1(zeta: float, sample: UnivariateSample) -> float:
    y = sample.values
    above = int(np.count_nonzero(y >= zeta))
    below = int(np.count_nonzero(y <= zeta))
    return min(above, below) / sample.n


def zd1(zeta: float, sample: UnivariateSample) -> float:
    """Largest alpha whose zonoid trimmed interval contains zeta.

    With the sample sorted away from zeta's side of the mean, the prefix sums
    ``h(m) = sum_{i<=m} (y_(i) - zeta)`` are concave in m and zeta lies in the
    region of level m/n exactly when ``h(m) >= 0``. The answer is the root of the
    piecewise linear h on the first segment where it turns negative.
    """
    if sample.is_constant:
        return 1.0 if zeta == sample.sorted[0] else 0.0
    if zeta >= sample.mean:
        dev = sample.sorted[::-1] - zeta
    else:
        dev = zeta - sample.sorted
    h = np.cumsum(dev)
    if h[0] < 0:
        return 0.0
    negative = np.flatnonzero(h < 0)
    if negative.size == 0:
        return 1.0
    k = int(negative[0])
    m_star = k + h[k - 1] / -dev[k]
    return float(min(1.0, m_star / sample.n))


def pd1(zeta: float, sample: UnivariateSample) -> float:
    mad = sample.mad
    if mad == 0.0:
        return 1.0 if zeta == sample.median else 0.0
    return 1.0 / (1.0 + abs(zeta - sample.median) / mad)


def _one_sided(zeta: float, sample: UnivariateSample) -> float:
    excess = max(zeta - sample.median, 0.0)
    scale = sample.mad_plus
    if scale is None:
        return 1.0 if excess == 0.0 else 0.0
    return 1.0 / (1.0 + excess / scale)


def apd1(zeta: float, sample: UnivariateSample) -> float:
    """Asymmetric projection depth, minimized over both orientations of the line."""
    mirrored = UnivariateSample(-sample.values)
    return min(_one_sided(zeta, sample), _one_sided(-zeta, mirrored))


Kernel = Callable[[float, UnivariateSample], float]

KERNELS: dict[DepthNotion, Kernel] = {
    DepthNotion.MAHALANOBIS: md1,
    DepthNotion.ZONOID: zd1,
    DepthNotion.HALFSPACE: hd1,
    DepthNotion.PROJECTION: pd1,
    DepthNotion.ASYM_PROJECTION: apd1,
}
