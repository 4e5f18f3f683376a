"""CLI handler for ``sphere-depth depth``."""

from __future__ import annotations

import sys
import time
from argparse import Namespace
from typing import Any

from pydantic import ValidationError

from sphere_depth.approx import Algorithm, ApproxConfig, approximate
from sphere_depth.bench.loader import format_validation_error
from sphere_depth.cli.io import parse_point, read_dataset_csv
from sphere_depth.depths import exact_depth
from sphere_depth.errors import SphereDepthError, log_and_return_error
from sphere_depth.rand import make_stream


def _set(section: dict[str, Any], key: str, value: Any) -> None:
    if value is not None:
        section[key] = value


def build_config(args: Namespace) -> ApproxConfig:
    """Translate the algorithm flags into an ``ApproxConfig``; unset flags keep defaults."""
    algorithm = Algorithm(args.algo)
    refinement: dict[str, Any] = {}
    simplices: dict[str, Any] = {}
    annealing: dict[str, Any] = {}
    descent: dict[str, Any] = {}
    nelder_mead: dict[str, Any] = {}

    _set(refinement, "n_ref", args.n_ref)
    _set(refinement, "shrink", args.shrink)
    _set(simplices, "alpha", args.dirichlet_alpha)
    _set(annealing, "cooling", args.cooling)
    _set(descent, "line_search", args.line_search)
    _set(descent, "n_ls", args.n_ls)
    _set(descent, "golden_tol", args.golden_tol)
    _set(nelder_mead, "bound", args.bound)
    # shared flags go to the family of the chosen algorithm
    if algorithm is Algorithm.SA:
        _set(annealing, "cap_divisor", args.cap_divisor)
        _set(annealing, "start", args.start)
    else:
        _set(nelder_mead, "cap_divisor", args.cap_divisor)
        _set(nelder_mead, "start", args.start)
    if algorithm is Algorithm.CD:
        _set(descent, "space", args.space)
    else:
        _set(nelder_mead, "space", args.space)

    return ApproxConfig(
        algorithm=algorithm,
        budget=args.budget,
        refinement=refinement,
        simplices=simplices,
        annealing=annealing,
        descent=descent,
        nelder_mead=nelder_mead,
    )


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def run_depth(args: Namespace) -> None:
    try:
        cfg = None if args.exact else build_config(args)
    except ValidationError as exc:
        message = format_validation_error(exc)
        print(f"Error: invalid algorithm settings:\n{message}", file=sys.stderr)
        sys.exit(2)

    try:
        X, _ = read_dataset_csv(args.data)
        z = parse_point(args.point, X)
        started = time.perf_counter()
        if cfg is None:
            value = exact_depth(args.notion, z, X)
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            print(f"depth={_fmt(value)} algo=exact time_ms={elapsed_ms:.3f}")
            return
        result = approximate(args.notion, z, X, cfg, make_stream(args.seed))
        elapsed_ms = (time.perf_counter() - started) * 1000.0
    except (SphereDepthError, OSError, ValueError) as exc:
        print(
            "Error: "
            + log_and_return_error(command="depth", exc=exc, user_message=str(exc)),
            file=sys.stderr,
        )
        sys.exit(1)

    direction = ",".join(_fmt(float(v)) for v in result.best_direction)
    print(
        f"depth={_fmt(result.value)} algo={result.algorithm} evals={result.evals_used} "
        f"direction={direction} time_ms={elapsed_ms:.3f}"
    )
