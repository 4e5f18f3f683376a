#!/usr/bin/env python3
"""CI enforcement: random draws go through sphere_depth.rand streams only.

Flags ``import random`` anywhere and any ``np.random`` / ``numpy.random``
attribute use outside rand.py, since a hidden global generator breaks
per-(cell, replication, variant) reproducibility.
"""

from __future__ import annotations

import ast
import sys
from pathlib import Path

ALLOWED_FILES = {"rand.py"}
SRC_DIR = Path(__file__).resolve().parent.parent / "src" / "sphere_depth"
NUMPY_ALIASES = {"np", "numpy"}


def _is_numpy_random(node: ast.Attribute) -> bool:
    return (
        node.attr == "random"
        and isinstance(node.value, ast.Name)
        and node.value.id in NUMPY_ALIASES
    )


def check() -> list[str]:
    violations: list[str] = []
    for py_file in sorted(SRC_DIR.rglob("*.py")):
        rel = py_file.relative_to(SRC_DIR)
        try:
            tree = ast.parse(py_file.read_text(encoding="utf-8"))
        except SyntaxError as exc:
            violations.append(f"{rel}: cannot parse ({exc.msg})")
            continue
        allowed = py_file.name in ALLOWED_FILES
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                for alias in node.names:
                    if alias.name == "random" or (
                        not allowed and alias.name.startswith("numpy.random")
                    ):
                        violations.append(f"{rel}:{node.lineno}: import {alias.name}")
            elif isinstance(node, ast.ImportFrom):
                module = node.module or ""
                if module == "random" or (not allowed and module.startswith("numpy.random")):
                    violations.append(f"{rel}:{node.lineno}: from {module}")
            elif isinstance(node, ast.Attribute) and not allowed and _is_numpy_random(node):
                violations.append(f"{rel}:{node.lineno}: numpy.random used directly")
    return violations


def main() -> None:
    violations = check()
    if violations:
        print("ERROR: random sources outside sphere_depth.rand:")
        for v in violations:
            print(f"  {v}")
        sys.exit(1)
    print("OK: all randomness flows through sphere_depth.rand")


if __name__ == "__main__":
    main()
