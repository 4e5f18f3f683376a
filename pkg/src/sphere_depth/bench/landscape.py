from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from sphere_depth.depths import (
    DepthNotion,
    EvalCounter,
    as_dataset,
    as_point,
    center_on,
    centered_depth,
)
from sphere_depth.errors import DimensionMismatch


@dataclass(frozen=True)
class LandscapePoint:
    lon: float
    lat: float
    depth: float


def landscape(
    notion: DepthNotion | str, z: ArrayLike, X: ArrayLike, resolution: int
) -> list[LandscapePoint]:
    """Projected depth over an ``m x 2m`` latitude/longitude grid of S^2.

    Latitudes run over ``[-pi/2, pi/2]`` and longitudes over ``[-pi, pi)``;
    rows come latitude-major. The minimum over the grid bounds the depth from above.
    """
    if resolution < 1:
        raise ValueError(f"resolution must be positive, got {resolution}")
    data = as_dataset(X)
    if data.shape[1] != 3:
        raise DimensionMismatch(f"landscapes are defined for d = 3, got d = {data.shape[1]}")
    point = as_point(z, 3)
    notion = DepthNotion(notion)
    counter = EvalCounter.unlimited()
    centered = center_on(data, point)

    if resolution == 1:
        lats = np.zeros(1)
    else:
        lats = np.linspace(-math.pi / 2, math.pi / 2, resolution)
    lons = -math.pi + math.pi * np.arange(2 * resolution) / resolution

    out: list[LandscapePoint] = []
    for lat in lats:
        for lon in lons:
            p = np.array(
                [math.cos(lat) * math.cos(lon), math.cos(lat) * math.sin(lon), math.sin(lat)]
            )
            depth = centered_depth(notion, centered, p, counter)
            out.append(LandscapePoint(lon=float(lon), lat=float(lat), depth=depth))
    return out
