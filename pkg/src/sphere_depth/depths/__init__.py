"""Univariate depth kernels, the projected-depth objective, and exact oracles."""

from sphere_depth.depths.kernels import (
    KERNELS,
    DepthNotion,
    UnivariateSample,
    apd1,
    hd1,
    md1,
    pd1,
    zd1,
)
from sphere_depth.depths.objective import (
    EvalCounter,
    as_dataset,
    as_point,
    center_on,
    centered_depth,
    project,
    project_point,
    projected_depth,
)
from sphere_depth.depths.oracles import (
    exact_depth,
    exact_halfspace_2d,
    exact_mahalanobis,
    exact_zonoid,
    has_oracle,
)

__all__ = [
    "KERNELS",
    "DepthNotion",
    "EvalCounter",
    "UnivariateSample",
    "apd1",
    "as_dataset",
    "as_point",
    "center_on",
    "centered_depth",
    "exact_depth",
    "exact_halfspace_2d",
    "exact_mahalanobis",
    "exact_zonoid",
    "has_oracle",
    "hd1",
    "md1",
    "pd1",
    "project",
    "project_point",
    "projected_depth",
    "zd1",
]
