"""Tests for sphere geometry: Householder maps, geodesics, frames, means and grids."""

from __future__ import annotations

import math

import numpy as np
import pytest
from conftest import make_rng

from sphere_depth.errors import (
    DegenerateGeodesic,
    DegenerateMean,
    DimensionMismatch,
    GridTooCoarse,
)
from sphere_depth.geometry import (
    from_spherical,
    great_circle_distance,
    great_circle_point,
    householder_apply,
    naive_mean,
    spherical_cap_grid,
    spherical_grid,
    tangent_frame,
    tangent_frame_direction,
    unit,
)
from sphere_depth.rand import rnd_sphere


class TestHouseholder:
    @pytest.mark.parametrize("d", [2, 3, 7, 20])
    def test_involution_and_isometry(self, d: int):
        rng = make_rng(1, d)
        for _ in range(20):
            p = rnd_sphere(d, rng)
            x = rng.standard_normal(d)
            y = householder_apply(x, p)
            assert np.linalg.norm(y) == pytest.approx(np.linalg.norm(x), abs=1e-12)
            np.testing.assert_allclose(householder_apply(y, p), x, atol=1e-12)

    def test_maps_pole_to_p(self):
        rng = make_rng(2)
        p = rnd_sphere(5, rng)
        np.testing.assert_allclose(householder_apply(unit(5), p), p, atol=1e-12)

    def test_pole_is_identity(self):
        x = np.array([0.3, -0.2, 0.9])
        np.testing.assert_array_equal(householder_apply(x, unit(3)), x)

    def test_rows_match_single_vectors(self):
        rng = make_rng(3)
        p = rnd_sphere(4, rng)
        rows = rng.standard_normal((6, 4))
        stacked = householder_apply(rows, p)
        for row, out in zip(rows, stacked):
            np.testing.assert_allclose(householder_apply(row, p), out, atol=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            householder_apply(np.ones(3), unit(4))


class TestGreatCircleDistance:
    def test_orthogonal(self):
        assert great_circle_distance(unit(3, 0), unit(3, 1)) == pytest.approx(math.pi / 2)

    def test_antipodal(self):
        assert great_circle_distance(unit(3, 0), -unit(3, 0)) == pytest.approx(math.pi)

    def test_identical(self):
        u = np.array([0.6, 0.8])
        assert great_circle_distance(u, u) == 0.0

    @pytest.mark.parametrize("d", [2, 5])
    def test_symmetric_and_matches_chord(self, d: int):
        rng = make_rng(10, d)
        for _ in range(1000):
            u, v = rnd_sphere(d, rng), rnd_sphere(d, rng)
            angle = great_circle_distance(u, v)
            assert great_circle_distance(v, u) == angle
            chord = float(np.linalg.norm(u - v))
            assert chord == pytest.approx(2.0 * math.sin(angle / 2.0), abs=1e-9)

    def test_tiny_angle_is_accurate(self):
        angle = 1e-8
        v = np.array([math.cos(angle), math.sin(angle)])
        assert great_circle_distance(unit(2), v) == pytest.approx(angle, rel=1e-6)


class TestGreatCirclePoint:
    def test_endpoints(self):
        x, y = unit(3, 0), np.array([0.0, 0.6, 0.8])
        np.testing.assert_allclose(great_circle_point(x, y, 0.0), x, atol=1e-12)
        np.testing.assert_allclose(great_circle_point(x, y, 1.0), y, atol=1e-12)

    @pytest.mark.parametrize("t", [-1.5, -0.5, 0.3, 0.9, 1.7])
    def test_distance_scales_with_t(self, t: float):
        rng = make_rng(4)
        x, y = rnd_sphere(4, rng), rnd_sphere(4, rng)
        alpha = great_circle_distance(x, y)
        point = great_circle_point(x, y, t)
        assert np.linalg.norm(point) == pytest.approx(1.0, abs=1e-12)
        expected = abs(t) * alpha
        # distances wrap at pi
        expected = min(expected % (2 * math.pi), 2 * math.pi - expected % (2 * math.pi))
        assert great_circle_distance(x, point) == pytest.approx(expected, abs=1e-9)

    def test_bound_limits_movement_to_quarter_circle(self):
        x = unit(2, 0)
        angle = math.pi / 3
        y = np.array([math.cos(angle), math.sin(angle)])
        point = great_circle_point(x, y, 3.0, bound=True)
        assert great_circle_distance(x, point) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_parallel_points_raise(self):
        with pytest.raises(DegenerateGeodesic):
            great_circle_point(unit(3), unit(3), 0.5)
        with pytest.raises(DegenerateGeodesic):
            great_circle_point(unit(3), -unit(3), 0.5)


class TestTangentFrame:
    @pytest.mark.parametrize("d", [2, 3, 6, 15])
    def test_orthonormal_and_tangent(self, d: int):
        rng = make_rng(5, d)
        u = rnd_sphere(d, rng)
        frame = tangent_frame(u)
        assert frame.shape == (d - 1, d)
        np.testing.assert_allclose(frame @ frame.T, np.eye(d - 1), atol=1e-10)
        np.testing.assert_allclose(frame @ u, np.zeros(d - 1), atol=1e-10)

    def test_limit_at_last_pole(self):
        u = unit(4, 3)
        for j in range(3):
            np.testing.assert_array_equal(tangent_frame_direction(u, j), unit(4, j))

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            tangent_frame_direction(unit(3), 2)


class TestNaiveMean:
    def test_two_axes(self):
        np.testing.assert_allclose(
            naive_mean([unit(2, 0), unit(2, 1)]), np.array([1.0, 1.0]) / math.sqrt(2)
        )

    def test_antipodal_points_are_degenerate(self):
        with pytest.raises(DegenerateMean):
            naive_mean([unit(3), -unit(3)])


class TestGrids:
    def test_from_spherical_gives_unit_vectors(self):
        rng = make_rng(6)
        angles = rng.uniform(0, math.pi, size=(10, 4))
        np.testing.assert_allclose(np.linalg.norm(from_spherical(angles), axis=1), 1.0)

    def test_grid_d2_is_half_circle(self):
        grid = spherical_grid(2, 4)
        assert grid.shape == (4, 2)
        np.testing.assert_allclose(grid[1], np.array([1.0, 1.0]) / math.sqrt(2))

    def test_grid_d3_fills_budget_on_hemisphere(self):
        grid = spherical_grid(3, 100)
        assert grid.shape == (100, 3)
        np.testing.assert_allclose(np.linalg.norm(grid, axis=1), 1.0)
        assert np.all(grid[:, 0] >= -1e-12)

    @pytest.mark.parametrize("d, budget", [(5, 1000), (10, 1000)])
    def test_grid_never_exceeds_budget(self, d: int, budget: int):
        assert spherical_grid(d, budget).shape[0] <= budget

    def test_grid_too_coarse_in_high_dimension(self):
        with pytest.raises(GridTooCoarse):
            spherical_grid(11, 1000)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_cap_grid_stays_in_cap(self, d: int):
        rng = make_rng(7, d)
        p = rnd_sphere(d, rng)
        eps = 0.4
        grid = spherical_cap_grid(p, eps, 200)
        assert 0 < grid.shape[0] <= 200
        for q in grid:
            assert np.linalg.norm(q) == pytest.approx(1.0, abs=1e-12)
            assert great_circle_distance(p, q) <= eps + 1e-9

    def test_cap_grid_d2_is_symmetric_around_center(self):
        grid = spherical_cap_grid(unit(2), 0.5, 10)
        angles = np.sort(np.arctan2(grid[:, 1], grid[:, 0]))
        np.testing.assert_allclose(angles, -angles[::-1], atol=1e-12)
        assert angles[-1] == pytest.approx(0.5)
