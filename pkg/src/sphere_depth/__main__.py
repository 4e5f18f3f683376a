"""CLI entry point: python -m sphere_depth <command>."""

from __future__ import annotations

import argparse
import logging
import sys

NOTIONS = ["mahalanobis", "zonoid", "halfspace", "projection", "asym_projection"]
ALGORITHMS = ["RS", "GS", "RRS", "RGS", "RaSi", "SA", "CD", "NM"]


def _algorithm(value: str) -> str:
    for name in ALGORITHMS:
        if value.lower() == name.lower():
            return name
    raise argparse.ArgumentTypeError(
        f"unknown algorithm {value!r} (choose from {', '.join(ALGORITHMS)})"
    )


def _add_data_args(parser: argparse.ArgumentParser, default_notion: str) -> None:
    parser.add_argument("data", help="CSV file with one data point per row")
    parser.add_argument(
        "--point", default="mean", help="Query point: 'mean' or comma-separated coordinates"
    )
    parser.add_argument("--notion", choices=NOTIONS, default=default_notion)


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(
        prog="sphere-depth",
        description="Approximate projection-property data depths over the unit sphere",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: WARNING)",
    )
    sub = parser.add_subparsers(dest="command")

    dp = sub.add_parser("depth", help="Depth of one point w.r.t. a data file")
    _add_data_args(dp, "halfspace")
    dp.add_argument("--algo", type=_algorithm, default="NM", help="Approximation algorithm")
    dp.add_argument("--budget", type=int, default=1000, help="Number of projected depths")
    dp.add_argument("--seed", type=int, default=0)
    dp.add_argument("--exact", action="store_true", default=False, help="Use an exact oracle")
    dp.add_argument("--n-ref", type=int, default=None, help="RRS/RGS refinement rounds")
    dp.add_argument("--shrink", type=float, default=None, help="RRS/RGS cap shrink factor")
    dp.add_argument("--dirichlet-alpha", type=float, default=None, help="RaSi concentration")
    dp.add_argument("--cooling", type=float, default=None, help="SA cooling factor")
    dp.add_argument("--cap-divisor", type=float, default=None, help="SA/NM cap size divisor")
    dp.add_argument("--start", choices=["Mn", "Rn"], default=None, help="SA/NM start")
    dp.add_argument("--space", choices=["Ec", "Sp"], default=None, help="CD/NM search space")
    dp.add_argument("--line-search", choices=["Eq", "GS"], default=None, help="CD line search")
    dp.add_argument("--n-ls", type=int, default=None, help="CD uniform line-search steps")
    dp.add_argument("--golden-tol", type=float, default=None, help="CD golden-section width")
    dp.add_argument("--bound", choices=["y", "n"], default=None, help="NM bounded moves")

    bp = sub.add_parser("benchmark", help="Run an experiment config and write CSV results")
    bp.add_argument("config", help="Experiment config (YAML or JSON)")
    bp.add_argument("--out", default="results", help="Output directory")
    bp.add_argument("--threads", type=int, default=1, help="Parallel replications")
    bp.add_argument(
        "--verbose", action="store_true", default=False, help="Log one line per run"
    )

    lp = sub.add_parser("landscape", help="Projected depth over a lat/lon grid (d = 3)")
    _add_data_args(lp, "halfspace")
    lp.add_argument("--resolution", type=int, default=36, help="Latitude rows m (m x 2m grid)")
    lp.add_argument("--out", default="-", help="Output CSV (default: stdout)")

    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command == "depth":
        from sphere_depth.cli.depth import run_depth
        run_depth(args)
    elif args.command == "benchmark":
        if args.verbose and args.log_level == "WARNING":
            logging.getLogger("sphere_depth.telemetry").setLevel(logging.INFO)
        from sphere_depth.cli.benchmark import run_benchmark
        run_benchmark(args)
    elif args.command == "landscape":
        from sphere_depth.cli.landscape import run_landscape
        run_landscape(args)
    else:
        parser.print_help(sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
