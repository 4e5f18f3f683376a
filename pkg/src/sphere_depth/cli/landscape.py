"""CLI handler for ``sphere-depth landscape``."""

from __future__ import annotations

import csv
import sys
from argparse import Namespace
from collections.abc import Sequence
from typing import TextIO

from sphere_depth.bench import LandscapePoint, format_number, landscape
from sphere_depth.cli.io import parse_point, read_dataset_csv
from sphere_depth.errors import SphereDepthError, log_and_return_error


def write_landscape_csv(points: Sequence[LandscapePoint], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["lon", "lat", "depth"])
    for p in points:
        writer.writerow([format_number(p.lon), format_number(p.lat), format_number(p.depth)])


def run_landscape(args: Namespace) -> None:
    try:
        X, _ = read_dataset_csv(args.data)
        z = parse_point(args.point, X)
        points = landscape(args.notion, z, X, args.resolution)
        if args.out == "-":
            write_landscape_csv(points, sys.stdout)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as f:
                write_landscape_csv(points, f)
    except (SphereDepthError, OSError, ValueError) as exc:
        print(
            "Error: "
            + log_and_return_error(command="landscape", exc=exc, user_message=str(exc)),
            file=sys.stderr,
        )
        sys.exit(1)
