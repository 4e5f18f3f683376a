"""Experiment configuration loading from YAML or JSON files."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from sphere_depth.bench.models import ExperimentConfig
from sphere_depth.errors import ConfigError

logger = logging.getLogger(__name__)


def json_path(loc: tuple[int | str, ...]) -> str:
    """Render a pydantic error location as ``$.variants[2].algorithm``."""
    parts = ["$"]
    for item in loc:
        if isinstance(item, int):
            parts.append(f"[{item}]")
        else:
            parts.append(f".{item}")
    return "".join(parts)


def format_validation_error(exc: ValidationError) -> str:
    return "\n".join(f"{json_path(err['loc'])}: {err['msg']}" for err in exc.errors())


def parse_experiment(data: dict[str, Any], source: str = "<config>") -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(
            f"invalid experiment config {source}:\n{format_validation_error(exc)}"
        ) from exc


def load_experiment_file(path: str | Path) -> ExperimentConfig:
    """Load an experiment config; JSON files load unchanged since YAML reads JSON."""
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            raw_data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse experiment config {path}: {exc}") from exc
    if raw_data is None:
        raise ConfigError(f"Empty experiment config: {path}")
    if not isinstance(raw_data, dict):
        raise ConfigError(f"Experiment config root must be a mapping/object: {path}")
    config = parse_experiment(raw_data, str(path))
    logger.debug("loaded experiment config %s: %d cells", path, len(config.cells()))
    return config
