"""Budgeted objective shared by all approximation algorithms."""

from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from sphere_depth.approx.models import ApproxResult, Start
from sphere_depth.depths import DepthNotion, EvalCounter, center_on, centered_depth
from sphere_depth.geometry import FloatArray, unit
from sphere_depth.rand import RngStream, rnd_sphere

ZERO_DIRECTION_TOL = 1e-12


class DepthObjective:
    """``p -> D(<p, z> | <p, X>)`` with a hard evaluation budget and best-so-far tracking.

    ``evaluate`` raises ``BudgetExhausted`` once the budget is spent; the best
    value, its direction and the improvement trace survive the abort.
    """

    def __init__(
        self,
        notion: DepthNotion,
        z: FloatArray,
        X: FloatArray,
        budget: int,
        *,
        record_history: bool = False,
    ) -> None:
        self.notion = DepthNotion(notion)
        self.z = z
        self.X = X
        self.centered = center_on(X, z)
        self.counter = EvalCounter(limit=budget)
        self.best_value = math.inf
        self.best_direction: FloatArray | None = None
        self.trace: list[tuple[int, float]] = []
        self.history: list[tuple[FloatArray, float]] | None = [] if record_history else None

    @property
    def d(self) -> int:
        return int(self.X.shape[1])

    @property
    def n(self) -> int:
        return int(self.X.shape[0])

    @property
    def budget(self) -> int:
        return self.counter.limit

    @property
    def remaining(self) -> int:
        return self.counter.remaining

    @cached_property
    def center(self) -> FloatArray:
        return self.X.mean(axis=0)

    def evaluate(self, p: FloatArray) -> float:
        value = centered_depth(self.notion, self.centered, p, self.counter)
        if self.history is not None:
            self.history.append((p.copy(), value))
        if value < self.best_value:
            self.best_value = value
            self.best_direction = p.copy()
            self.trace.append((self.counter.used, value))
        return value

    def incumbent(self) -> FloatArray:
        """Best direction so far, or the north pole before any evaluation."""
        if self.best_direction is None:
            return unit(self.d)
        return self.best_direction

    def start_direction(self, start: Start, rng: RngStream) -> FloatArray:
        """``z - mean`` normalized for ``Mn`` (random if z is the mean), uniform for ``Rn``."""
        if Start(start) is Start.MEAN:
            offset = self.z - self.center
            norm = float(np.linalg.norm(offset))
            if norm >= ZERO_DIRECTION_TOL:
                return offset / norm
        return rnd_sphere(self.d, rng)

    def result(self, algorithm: str) -> ApproxResult:
        value = self.best_value if self.trace else 1.0
        return ApproxResult(
            algorithm=algorithm,
            value=float(value),
            best_direction=self.incumbent().copy(),
            evals_used=self.counter.used,
            trace=list(self.trace),
            history=list(self.history or []),
        )
