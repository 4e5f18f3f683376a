"""Tests for the sphere optimizers, their configuration and the dispatch contract."""

from __future__ import annotations

import math

import numpy as np
import pytest
from conftest import make_cross_data, make_normal_sample, make_rng
from pydantic import ValidationError

from sphere_depth.approx import (
    Algorithm,
    AnnealingParams,
    ApproxConfig,
    ApproxResult,
    DepthObjective,
    LineSearch,
    NelderMeadParams,
    Space,
    Start,
    approximate,
    approximate_many,
    great_semicircle,
    line_search_golden,
    line_search_uniform,
    temperature_levels,
)
from sphere_depth.approx.nelder_mead import _step
from sphere_depth.depths import (
    DepthNotion,
    EvalCounter,
    exact_depth,
    exact_halfspace_2d,
    exact_mahalanobis,
    exact_zonoid,
    has_oracle,
    projected_depth,
)
from sphere_depth.errors import DataTooSmall, GridTooCoarse
from sphere_depth.geometry import great_circle_point, naive_mean
from sphere_depth.rand import rnd_sphere

ALL_CONFIGS = [
    pytest.param(ApproxConfig(algorithm=Algorithm.RS, budget=200), id="RS"),
    pytest.param(ApproxConfig(algorithm=Algorithm.GS, budget=200), id="GS"),
    pytest.param(ApproxConfig(algorithm=Algorithm.RRS, budget=200), id="RRS"),
    pytest.param(ApproxConfig(algorithm=Algorithm.RGS, budget=200), id="RGS"),
    pytest.param(ApproxConfig(algorithm=Algorithm.RASI, budget=200), id="RaSi"),
    pytest.param(ApproxConfig(algorithm=Algorithm.SA, budget=200), id="SA-Mn"),
    pytest.param(
        ApproxConfig(algorithm=Algorithm.SA, budget=200, annealing={"start": "Rn"}), id="SA-Rn"
    ),
    pytest.param(ApproxConfig(algorithm=Algorithm.CD, budget=200), id="CD-Sp-GS"),
    pytest.param(
        ApproxConfig(algorithm=Algorithm.CD, budget=200, descent={"line_search": "Eq"}),
        id="CD-Sp-Eq",
    ),
    pytest.param(
        ApproxConfig(algorithm=Algorithm.CD, budget=200, descent={"space": "Ec"}), id="CD-Ec"
    ),
    pytest.param(ApproxConfig(algorithm=Algorithm.NM, budget=200), id="NM-Sp"),
    pytest.param(
        ApproxConfig(algorithm=Algorithm.NM, budget=200, nelder_mead={"bound": "n"}),
        id="NM-Sp-unbounded",
    ),
    pytest.param(
        ApproxConfig(algorithm=Algorithm.NM, budget=200, nelder_mead={"space": "Ec"}), id="NM-Ec"
    ),
]


def _assert_same_result(a: ApproxResult, b: ApproxResult) -> None:
    assert a.value == b.value
    assert a.evals_used == b.evals_used
    assert a.trace == b.trace
    np.testing.assert_array_equal(a.best_direction, b.best_direction)


class TestApproxConfig:
    def test_defaults(self):
        cfg = ApproxConfig(algorithm="NM")
        assert cfg.budget == 1000
        assert cfg.refinement.n_ref == 10
        assert cfg.refinement.shrink == 0.5
        assert cfg.simplices.alpha == 1.25
        assert cfg.annealing.cooling == 0.95
        assert cfg.annealing.cap_divisor == 10
        assert cfg.annealing.start is Start.MEAN
        assert (cfg.annealing.t0, cfg.annealing.t_min) == (1.0, 0.001)
        assert cfg.descent.space is Space.SPHERE
        assert cfg.descent.line_search is LineSearch.GOLDEN
        assert cfg.descent.n_ls == 10
        assert cfg.descent.golden_tol == 1e-3
        nm = cfg.nelder_mead
        assert (nm.space, nm.start, nm.cap_divisor) == (Space.SPHERE, Start.MEAN, 1)
        assert nm.bound is True
        assert (nm.reflection, nm.expansion, nm.contraction, nm.shrink) == (1, 2, 0.5, 0.5)

    @pytest.mark.parametrize("shrink", [0.0, 1.0, 1.5])
    def test_shrink_must_be_a_fraction(self, shrink: float):
        with pytest.raises(ValidationError):
            ApproxConfig(algorithm="RRS", refinement={"shrink": shrink})

    def test_budget_must_be_positive(self):
        with pytest.raises(ValidationError):
            ApproxConfig(algorithm="RS", budget=0)

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValidationError):
            ApproxConfig(algorithm="RS", iterations=5)

    def test_bound_accepts_yes_no(self):
        assert ApproxConfig(algorithm="NM", nelder_mead={"bound": "n"}).nelder_mead.bound is False
        assert ApproxConfig(algorithm="NM", nelder_mead={"bound": "y"}).nelder_mead.bound is True

    def test_temperatures_ordered(self):
        with pytest.raises(ValidationError):
            AnnealingParams(t0=0.01, t_min=0.1)

    def test_name_prefers_label(self):
        assert ApproxConfig(algorithm="RaSi").name == "RaSi"
        assert ApproxConfig(algorithm="RaSi", label=" rasi-2 ").name == "rasi-2"


class TestAnnealingSchedule:
    def test_default_level_count(self):
        assert temperature_levels(AnnealingParams()) == 135

    def test_exact_power_does_not_gain_a_level(self):
        assert temperature_levels(AnnealingParams(cooling=0.5, t0=1.0, t_min=0.125)) == 3


class TestConstantObjective:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS)
    @pytest.mark.parametrize("seed", range(5))
    def test_cross_data_gives_one_half(self, cfg: ApproxConfig, seed: int):
        result = approximate("halfspace", np.zeros(2), make_cross_data(), cfg, make_rng(seed))
        assert result.value == 0.5

    def test_grid_search_with_four_directions(self):
        cfg = ApproxConfig(algorithm="GS", budget=4)
        result = approximate("halfspace", np.zeros(2), make_cross_data(), cfg)
        assert result.value == 0.5
        assert result.evals_used == 4


class TestContracts:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS)
    def test_budget_trace_and_history(self, cfg: ApproxConfig):
        X = make_normal_sample(80, 3, seed=2)
        z = X[:10].mean(axis=0)
        cfg = cfg.model_copy(update={"record_history": True})
        result = approximate("zonoid", z, X, cfg, make_rng(3))
        assert 0 < result.evals_used <= cfg.budget
        values = [v for _, v in result.trace]
        assert values == sorted(values, reverse=True)
        assert result.value == values[-1]
        assert len(result.history) == result.evals_used
        assert result.value == min(v for _, v in result.history)
        assert np.linalg.norm(result.best_direction) == pytest.approx(1.0)

    @pytest.mark.parametrize("cfg", ALL_CONFIGS)
    def test_same_seed_same_result(self, cfg: ApproxConfig):
        X = make_normal_sample(60, 3, seed=4)
        z = X[:10].mean(axis=0)
        a = approximate("halfspace", z, X, cfg, make_rng(9))
        b = approximate("halfspace", z, X, cfg, make_rng(9))
        _assert_same_result(a, b)

    @pytest.mark.parametrize("notion", ["mahalanobis", "zonoid", "halfspace"])
    @pytest.mark.parametrize("cfg", ALL_CONFIGS)
    def test_never_below_exact(self, notion: str, cfg: ApproxConfig):
        X = make_normal_sample(100, 2, seed=5)
        z = X[:10].mean(axis=0)
        exact = exact_depth(notion, z, X)
        result = approximate(notion, z, X, cfg, make_rng(6))
        assert result.value >= exact - 1e-12

    @pytest.mark.parametrize("algorithm", ["RS", "NM"])
    def test_never_below_exact_at_sample_points(self, algorithm: str):
        X = make_normal_sample(7, 2, seed=11)
        cfg = ApproxConfig(algorithm=algorithm, budget=500)
        for i, z in enumerate(X):
            halfspace = approximate("halfspace", z, X, cfg, make_rng(12, i))
            assert halfspace.value >= exact_halfspace_2d(z, X) - 1e-12
            zonoid = approximate("zonoid", z, X, cfg, make_rng(13, i))
            assert zonoid.value >= exact_zonoid(z, X) - 1e-9

    def test_budget_abort_inside_line_search(self):
        X = make_normal_sample(50, 4, seed=7)
        cfg = ApproxConfig(algorithm="CD", budget=7)
        result = approximate("halfspace", X.mean(axis=0), X, cfg, make_rng())
        assert result.evals_used == 7

    def test_scaling_the_data_keeps_the_trace(self):
        X = make_normal_sample(50, 2, seed=8)
        z = X[:10].mean(axis=0)
        cfg = ApproxConfig(algorithm="RS", budget=100)
        a = approximate("halfspace", z, X, cfg, make_rng(1))
        b = approximate("halfspace", 3.0 * z, 3.0 * X, cfg, make_rng(1))
        assert a.trace == b.trace

    def test_missing_stream_rejected_for_random_algorithms(self):
        with pytest.raises(ValueError):
            approximate("halfspace", np.zeros(2), make_cross_data(), ApproxConfig(algorithm="RS"))

    def test_one_dimensional_data_is_exact(self):
        X = np.array([[1.0], [2.0], [3.0], [4.0]])
        result = approximate("halfspace", [2.0], X, ApproxConfig(algorithm="NM"), make_rng())
        assert result.value == 0.5
        assert result.evals_used == 1


class TestRandomSearch:
    def test_single_draw(self):
        X = make_normal_sample(30, 3)
        z = np.array([0.1, 0.2, -0.1])
        p = rnd_sphere(3, make_rng(5))
        expected = projected_depth(DepthNotion.HALFSPACE, z, X, p, EvalCounter(1))
        cfg = ApproxConfig(algorithm="RS", budget=1)
        result = approximate("halfspace", z, X, cfg, make_rng(5))
        assert result.value == expected
        assert result.evals_used == 1

    def test_uses_full_budget(self):
        X = make_normal_sample(30, 3)
        cfg = ApproxConfig(algorithm="RS", budget=37)
        result = approximate("halfspace", X[0], X, cfg, make_rng())
        assert result.evals_used == 37


class TestGridSearches:
    def test_grid_search_is_deterministic_without_stream(self):
        X = make_normal_sample(40, 3)
        z = X[:10].mean(axis=0)
        cfg = ApproxConfig(algorithm="GS", budget=100)
        _assert_same_result(approximate("zonoid", z, X, cfg), approximate("zonoid", z, X, cfg))

    def test_grid_too_coarse_propagates(self):
        X = make_normal_sample(40, 11)
        with pytest.raises(GridTooCoarse):
            approximate("zonoid", X.mean(axis=0), X, ApproxConfig(algorithm="GS", budget=1000))

    def test_refined_grid_is_deterministic(self):
        X = make_normal_sample(40, 3)
        z = X[:10].mean(axis=0)
        cfg = ApproxConfig(algorithm="RGS", budget=500)
        first = approximate("halfspace", z, X, cfg)
        _assert_same_result(first, approximate("halfspace", z, X, cfg))
        assert first.evals_used <= 500


class TestRefinedRandomSearch:
    def test_pole_counts_against_budget(self):
        X = make_normal_sample(40, 3)
        cfg = ApproxConfig(algorithm="RRS", budget=10)
        result = approximate("halfspace", X.mean(axis=0), X, cfg, make_rng(2))
        assert result.evals_used == 10

    def test_first_evaluation_is_north_pole(self):
        X = make_normal_sample(40, 3)
        z = X[:10].mean(axis=0)
        cfg = ApproxConfig(algorithm="RRS", budget=20, record_history=True)
        result = approximate("halfspace", z, X, cfg, make_rng(2))
        np.testing.assert_array_equal(result.history[0][0], np.array([1.0, 0.0, 0.0]))


class TestRandomSimplices:
    def test_needs_d_plus_one_points(self):
        X = make_normal_sample(3, 3)
        with pytest.raises(DataTooSmall):
            approximate("halfspace", X.mean(axis=0), X, ApproxConfig(algorithm="RaSi"), make_rng())

    def test_degenerate_simplices_are_skipped(self):
        X = np.ones((5, 2))
        cfg = ApproxConfig(algorithm="RaSi", budget=10)
        result = approximate("halfspace", np.ones(2), X, cfg, make_rng())
        assert result.evals_used == 0
        assert result.value == 1.0


class _ScriptedObjective:
    """Hands out queued values in order and records every evaluated direction."""

    def __init__(self, *values: float) -> None:
        self.values = list(values)
        self.evaluated: list[np.ndarray] = []

    def evaluate(self, p: np.ndarray) -> float:
        self.evaluated.append(p.copy())
        return self.values.pop(0)


class TestNelderMeadStep:
    @pytest.fixture
    def simplex(self):
        eye = np.eye(3)
        return [(0.1, eye[0]), (0.2, eye[1]), (0.9, eye[2])]

    @pytest.fixture
    def centroid(self):
        return naive_mean(np.eye(3)[:2])

    def test_outside_contraction_moves_toward_reflected_point(self, simplex, centroid):
        objective = _ScriptedObjective(0.5, 0.3)
        _step(objective, simplex, NelderMeadParams())
        reflected, contracted = objective.evaluated
        np.testing.assert_allclose(reflected, [0.0, 0.0, -1.0], atol=1e-12)
        expected = great_circle_point(centroid, reflected, 0.5, True)
        np.testing.assert_allclose(contracted, expected)
        assert contracted[2] < 0
        assert [v for v, _ in simplex] == [0.1, 0.2, 0.3]
        np.testing.assert_array_equal(simplex[-1][1], contracted)

    def test_inside_contraction_moves_toward_worst_vertex(self, simplex, centroid):
        objective = _ScriptedObjective(1.0, 0.3)
        _step(objective, simplex, NelderMeadParams())
        _, contracted = objective.evaluated
        expected = great_circle_point(centroid, np.eye(3)[2], 0.5, True)
        np.testing.assert_allclose(contracted, expected)
        assert contracted[2] > 0

    def test_failed_contraction_shrinks_toward_best(self, simplex):
        objective = _ScriptedObjective(0.5, 0.95, 0.7, 0.4)
        _step(objective, simplex, NelderMeadParams())
        assert len(objective.evaluated) == 4
        assert [v for v, _ in simplex] == [0.1, 0.4, 0.7]
        np.testing.assert_array_equal(simplex[0][1], np.eye(3)[0])


class TestLineSearches:
    def _objective(self) -> tuple[DepthObjective, np.ndarray, np.ndarray]:
        X = make_normal_sample(300, 2, seed=10)
        z = np.array([0.8, -0.4])
        center = X.mean(axis=0)
        cov = np.cov(X.T, bias=True)
        best = np.linalg.solve(cov, z - center)
        best /= np.linalg.norm(best)
        angle = 0.3
        u = np.array([math.cos(angle), math.sin(angle)])
        c, s = best
        # rotate the optimum by 0.3 rad to get the line's base point
        u = np.array([c * u[0] - s * u[1], s * u[0] + c * u[1]])
        objective = DepthObjective(DepthNotion.MAHALANOBIS, z, X, 100_000)
        tangent = np.array([-u[1], u[0]])
        return objective, u, tangent

    def test_uniform_spends_n_plus_one(self):
        objective, u, tangent = self._objective()
        start = (u, objective.evaluate(u))
        line_search_uniform(objective, great_semicircle(u, tangent), -1.5, 1.5, 10, start)
        assert objective.counter.used == 12

    def test_golden_matches_dense_scan(self):
        objective, u, tangent = self._objective()
        curve = great_semicircle(u, tangent)
        start = (u, objective.evaluate(u))
        half = math.pi / 2
        _, golden_value = line_search_golden(objective, curve, -half, half, 1e-3, start)
        assert objective.counter.used < 30
        _, scan_value = line_search_uniform(objective, curve, -half, half, 10_000, start)
        assert golden_value == pytest.approx(scan_value, abs=1e-5)
        exact = exact_mahalanobis(objective.z, objective.X)
        assert golden_value == pytest.approx(exact, abs=1e-5)

    def test_incumbent_kept_when_nothing_improves(self):
        objective, u, tangent = self._objective()
        start = (u, -1.0)
        direction, value = line_search_golden(
            objective, great_semicircle(u, tangent), -0.5, 0.5, 1e-2, start
        )
        assert value == -1.0
        assert direction is u


class TestApproximateMany:
    def test_each_point_gets_its_own_budget(self):
        X = make_normal_sample(50, 3)
        Z = X[:4]
        cfg = ApproxConfig(algorithm="NM", budget=50)
        results = approximate_many("halfspace", Z, X, cfg, make_rng())
        assert len(results) == 4
        assert all(r.evals_used == 50 for r in results)


class TestUpperBoundAcrossDimensions:
    @pytest.mark.parametrize("d", [2, 5, 10])
    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_oracle_bounds(self, d: int, algorithm: Algorithm):
        X = make_normal_sample(100, d, seed=d)
        z = X[:10].mean(axis=0)
        cfg = ApproxConfig(algorithm=algorithm, budget=300)
        for notion in DepthNotion:
            if not has_oracle(notion, d):
                continue
            exact = exact_depth(notion, z, X)
            for seed in range(5):
                try:
                    result = approximate(notion, z, X, cfg, make_rng(seed))
                except GridTooCoarse:
                    continue
                assert result.value >= exact - 1e-12


class TestApproxResult:
    def test_best_at_reads_the_trace(self):
        result = ApproxResult(
            algorithm="RS",
            value=0.2,
            best_direction=np.array([1.0, 0.0]),
            evals_used=10,
            trace=[(1, 0.5), (4, 0.3), (9, 0.2)],
        )
        assert math.isnan(result.best_at(0))
        assert result.best_at(3) == 0.5
        assert result.best_at(4) == 0.3
        assert result.best_at(10) == 0.2
