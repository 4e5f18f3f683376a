from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sphere_depth.geometry import FloatArray


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", validate_assignment=True)


class Algorithm(str, Enum):
    RS = "RS"
    GS = "GS"
    RRS = "RRS"
    RGS = "RGS"
    RASI = "RaSi"
    SA = "SA"
    CD = "CD"
    NM = "NM"


class Start(str, Enum):
    MEAN = "Mn"
    RANDOM = "Rn"


class Space(str, Enum):
    EUCLIDEAN = "Ec"
    SPHERE = "Sp"


class LineSearch(str, Enum):
    UNIFORM = "Eq"
    GOLDEN = "GS"


def _check_unit_interval(name: str, value: float) -> float:
    if not 0.0 < value < 1.0:
        raise ValueError(f"{name} must lie strictly between 0 and 1")
    return value


class RefinementParams(_StrictModel):
    """Refined random / grid search: rounds and cap shrinking factor."""

    n_ref: int = Field(default=10, ge=1)
    shrink: float = 0.5

    @field_validator("shrink")
    @classmethod
    def validate_shrink(cls, v: float) -> float:
        return _check_unit_interval("shrink", v)


class SimplicesParams(_StrictModel):
    alpha: float = Field(default=1.25, gt=0.0)


class AnnealingParams(_StrictModel):
    cooling: float = 0.95
    cap_divisor: float = Field(default=10.0, ge=1.0)
    start: Start = Start.MEAN
    t0: float = Field(default=1.0, gt=0.0)
    t_min: float = Field(default=0.001, gt=0.0)

    @field_validator("cooling")
    @classmethod
    def validate_cooling(cls, v: float) -> float:
        return _check_unit_interval("cooling", v)

    @model_validator(mode="after")
    def check_temperatures(self) -> AnnealingParams:
        if self.t_min >= self.t0:
            raise ValueError("t_min must be below t0")
        return self


class DescentParams(_StrictModel):
    space: Space = Space.SPHERE
    line_search: LineSearch = LineSearch.GOLDEN
    n_ls: int = Field(default=10, ge=1)
    golden_tol: float = Field(default=1e-3, gt=0.0)
    # half-width of the Euclidean line x + lambda * e_j
    euclidean_span: float = Field(default=2.0, gt=0.0)


class NelderMeadParams(_StrictModel):
    space: Space = Space.SPHERE
    start: Start = Start.MEAN
    cap_divisor: float = Field(default=1.0, ge=1.0)
    bound: bool = True
    reflection: float = Field(default=1.0, gt=0.0)
    expansion: float = Field(default=2.0, gt=1.0)
    contraction: float = 0.5
    shrink: float = 0.5

    @field_validator("bound", mode="before")
    @classmethod
    def parse_bound(cls, v: object) -> object:
        if isinstance(v, str) and v.strip().lower() in {"y", "n"}:
            return v.strip().lower() == "y"
        return v

    @field_validator("contraction", "shrink")
    @classmethod
    def validate_fraction(cls, v: float, info) -> float:
        return _check_unit_interval(info.field_name, v)


class ApproxConfig(_StrictModel):
    """Algorithm choice, evaluation budget N and per-family parameters.

    Defaults are the tuned settings; only the record matching ``algorithm`` is read.
    """

    algorithm: Algorithm
    budget: int = Field(default=1000, ge=1)
    label: str = ""
    refinement: RefinementParams = Field(default_factory=RefinementParams)
    simplices: SimplicesParams = Field(default_factory=SimplicesParams)
    annealing: AnnealingParams = Field(default_factory=AnnealingParams)
    descent: DescentParams = Field(default_factory=DescentParams)
    nelder_mead: NelderMeadParams = Field(default_factory=NelderMeadParams)
    record_history: bool = False

    @field_validator("label")
    @classmethod
    def normalize_label(cls, value: str) -> str:
        return value.strip()

    @property
    def name(self) -> str:
        return self.label or self.algorithm.value


@dataclass(frozen=True)
class ApproxResult:
    """Minimal projected depth found, where, at what cost, and how it improved.

    ``trace`` holds ``(evaluation index, best value so far)`` at every improvement;
    evaluation indices are 1-based.
    """

    algorithm: str
    value: float
    best_direction: FloatArray
    evals_used: int
    trace: list[tuple[int, float]]
    history: list[tuple[FloatArray, float]] = field(default_factory=list)

    def best_at(self, eval_index: int) -> float:
        """Best value after ``eval_index`` evaluations (nan before the first one)."""
        best = math.nan
        for idx, value in self.trace:
            if idx > eval_index:
                break
            best = value
        return best
