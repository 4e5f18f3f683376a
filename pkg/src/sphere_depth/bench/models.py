"""Benchmark configuration models: distributions, algorithm variants, experiments."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from pydantic import Field, field_validator, model_validator

from sphere_depth.approx.models import (
    Algorithm,
    AnnealingParams,
    ApproxConfig,
    ApproxResult,
    DescentParams,
    NelderMeadParams,
    RefinementParams,
    SimplicesParams,
    _StrictModel,
)
from sphere_depth.depths import DepthNotion

DEFAULT_SKEW_LEAD = 5.0


class Family(str, Enum):
    NORMAL = "normal"
    T5 = "t5"
    CAUCHY = "cauchy"
    SKEW_NORMAL = "skew_normal"
    UNIFORM = "uniform"
    EXPONENTIAL = "exponential"


class DistributionSpec(_StrictModel):
    """A sampling distribution in dimension ``d``.

    ``skew`` is the skewness vector of the skew normal family; it defaults to
    ``(5, 0, ..., 0)`` and is ignored by the other families.
    """

    family: Family
    d: int = Field(ge=1)
    skew: list[float] | None = None

    @model_validator(mode="after")
    def check_skew(self) -> DistributionSpec:
        if self.skew is not None and len(self.skew) != self.d:
            raise ValueError(f"skew has {len(self.skew)} entries, expected d = {self.d}")
        return self

    def skew_vector(self) -> list[float]:
        if self.skew is not None:
            return list(self.skew)
        return [DEFAULT_SKEW_LEAD] + [0.0] * (self.d - 1)


class DistributionChoice(_StrictModel):
    """A family to benchmark across all configured dimensions."""

    family: Family
    skew: list[float] | None = None

    def at(self, d: int) -> DistributionSpec:
        return DistributionSpec(family=self.family, d=d, skew=self.skew)


class AlgorithmVariant(_StrictModel):
    """An ``ApproxConfig`` without a budget; the experiment supplies the budgets."""

    algorithm: Algorithm
    label: str = ""
    refinement: RefinementParams = Field(default_factory=RefinementParams)
    simplices: SimplicesParams = Field(default_factory=SimplicesParams)
    annealing: AnnealingParams = Field(default_factory=AnnealingParams)
    descent: DescentParams = Field(default_factory=DescentParams)
    nelder_mead: NelderMeadParams = Field(default_factory=NelderMeadParams)

    @field_validator("label")
    @classmethod
    def normalize_label(cls, value: str) -> str:
        return value.strip()

    @property
    def name(self) -> str:
        return self.label or self.algorithm.value

    def to_config(self, budget: int) -> ApproxConfig:
        return ApproxConfig(budget=budget, **self.model_dump())


def _default_variants() -> list[AlgorithmVariant]:
    return [AlgorithmVariant(algorithm=a) for a in Algorithm]


class ExperimentConfig(_StrictModel):
    """One benchmark: every cell (distribution x notion x d x N) times ``replications``."""

    distributions: list[DistributionChoice] = Field(
        default_factory=lambda: [DistributionChoice(family=Family.NORMAL)]
    )
    notions: list[DepthNotion] = Field(default_factory=lambda: [DepthNotion.ZONOID])
    dimensions: list[int] = Field(default_factory=lambda: [5, 10, 15, 20])
    n: int = Field(default=1000, ge=1)
    budgets: list[int] = Field(default_factory=lambda: [100, 1000, 10000])
    replications: int = Field(default=10, ge=1)
    seed: int = Field(default=0, ge=0)
    variants: list[AlgorithmVariant] = Field(default_factory=_default_variants)
    record_timing: bool = True
    flow_points: int = Field(default=25, ge=2)

    @field_validator("distributions", mode="before")
    @classmethod
    def accept_family_names(cls, value: object) -> object:
        if isinstance(value, list):
            return [{"family": v} if isinstance(v, str) else v for v in value]
        return value

    @field_validator("distributions", "notions", "dimensions", "budgets", "variants")
    @classmethod
    def require_entries(cls, value: list) -> list:
        if not value:
            raise ValueError("must not be empty")
        return value

    @field_validator("dimensions", "budgets")
    @classmethod
    def require_positive(cls, value: list[int]) -> list[int]:
        for v in value:
            if v < 1:
                raise ValueError(f"entries must be positive, got {v}")
        return value

    @model_validator(mode="after")
    def check_consistency(self) -> ExperimentConfig:
        names = [v.name for v in self.variants]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"variant names must be unique, repeated: {', '.join(duplicates)}")
        families = [c.family for c in self.distributions]
        if len(set(families)) != len(families):
            raise ValueError("each distribution family may be listed once")
        for choice in self.distributions:
            if choice.skew is not None:
                for d in self.dimensions:
                    if len(choice.skew) != d:
                        raise ValueError(
                            f"skew vector of length {len(choice.skew)} does not fit d = {d}"
                        )
        return self

    def cells(self) -> list[Cell]:
        return [
            Cell(distribution=dist.at(d), notion=notion, d=d, budget=budget)
            for dist in self.distributions
            for notion in self.notions
            for d in self.dimensions
            for budget in self.budgets
        ]


@dataclass(frozen=True)
class Cell:
    distribution: DistributionSpec
    notion: DepthNotion
    d: int
    budget: int

    @property
    def key(self) -> str:
        return f"{self.distribution.family.value}/{self.notion.value}/d={self.d}/N={self.budget}"


@dataclass(frozen=True)
class RunRecord:
    """One algorithm variant on one (dataset, z) replication of a cell.

    ``result`` is None when the variant could not run in this cell (grid too
    coarse); ``value`` is then nan.
    """

    cell: Cell
    replication: int
    variant: str
    n: int
    seed: int
    value: float
    exact: float | None
    evals: int
    time_ms: float | None
    result: ApproxResult | None = None

    @property
    def missing(self) -> bool:
        return self.result is None
