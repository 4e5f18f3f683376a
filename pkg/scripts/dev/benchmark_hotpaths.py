"""Microbenchmarks for sphere_depth hot paths (baseline vs optimized implementations)."""

from __future__ import annotations

import math
import statistics
import time

import numpy as np

from sphere_depth.approx import ApproxConfig, approximate
from sphere_depth.depths import (
    UnivariateSample,
    exact_halfspace_2d,
    exact_zonoid,
    hd1,
    zd1,
)
from sphere_depth.rand import make_stream


def _time(label: str, fn, iterations: int) -> tuple[str, float]:
    samples: list[float] = []
    for _ in range(5):
        start = time.perf_counter()
        for _ in range(iterations):
            fn()
        elapsed = time.perf_counter() - start
        samples.append(elapsed / iterations)
    mean = statistics.mean(samples)
    print(f"{label:48s} {mean * 1_000:.3f} ms/op")
    return label, mean


def bench_zonoid_kernel() -> None:
    print("\n[1] Univariate zonoid depth: linear program vs sorted partial means")
    rng = make_stream(1)
    y = rng.standard_normal(1000)
    zeta = 0.7
    sample = UnivariateSample.of(y)

    def baseline() -> float:
        return exact_zonoid([zeta], y[:, None])

    def optimized() -> float:
        return zd1(zeta, UnivariateSample.of(y))

    if not math.isclose(baseline(), zd1(zeta, sample), abs_tol=1e-9):
        raise RuntimeError("zonoid kernel mismatch between LP and closed form")

    _, baseline_mean = _time("baseline_linprog_zonoid_1d", baseline, iterations=20)
    _, optimized_mean = _time("optimized_sorted_zonoid_kernel", optimized, iterations=200)
    print(f"speedup: {baseline_mean / optimized_mean:.2f}x")


def bench_halfspace_plane() -> None:
    print("\n[2] Halfspace depth in the plane: arc-by-arc scan vs angular sweep")
    rng = make_stream(2)
    X = rng.standard_normal((400, 2))
    z = np.array([0.3, -0.1])

    def baseline() -> float:
        diff = X - z
        base = np.arctan2(diff[:, 1], diff[:, 0])
        critical = np.sort(np.concatenate([base + math.pi / 2, base - math.pi / 2]) % math.tau)
        mids = (critical + np.roll(critical, -1)) / 2
        mids[-1] = (critical[-1] + critical[0] + math.tau) / 2
        best = 1.0
        for theta in mids:
            p = np.array([math.cos(theta), math.sin(theta)])
            best = min(best, hd1(float(z @ p), UnivariateSample.of(X @ p)))
        return best

    def optimized() -> float:
        return exact_halfspace_2d(z, X)

    if not math.isclose(baseline(), optimized()):
        raise RuntimeError("halfspace mismatch between scan and sweep")

    _, baseline_mean = _time("baseline_arc_scan_halfspace", baseline, iterations=3)
    _, optimized_mean = _time("optimized_angular_sweep_halfspace", optimized, iterations=50)
    print(f"speedup: {baseline_mean / optimized_mean:.2f}x")


def bench_evaluation_scaling() -> None:
    print("\n[3] Cost per projected depth as n doubles (random search, N = 200)")
    cfg = ApproxConfig(algorithm="RS", budget=200)
    previous: float | None = None
    for n in (10_000, 20_000, 40_000, 80_000):
        X = make_stream(3).standard_normal((n, 5))
        z = X[:10].mean(axis=0)
        _, mean = _time(
            f"random_search_halfspace_n={n}",
            lambda X=X, z=z: approximate("halfspace", z, X, cfg, make_stream(4)),
            iterations=1,
        )
        if previous is not None:
            print(f"ratio to n/2: {mean / previous:.2f}")
        previous = mean


def main() -> None:
    print("sphere_depth Hot Path Benchmarks")
    bench_zonoid_kernel()
    bench_halfspace_plane()
    bench_evaluation_scaling()


if __name__ == "__main__":
    main()
