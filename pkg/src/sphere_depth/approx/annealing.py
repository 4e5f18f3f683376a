from __future__ import annotations

import logging
import math

from sphere_depth.approx.models import AnnealingParams, ApproxConfig
from sphere_depth.approx.objective import DepthObjective
from sphere_depth.rand import RngStream, rnd_spherical_cap

logger = logging.getLogger(__name__)


def temperature_levels(params: AnnealingParams) -> int:
    """Number of geometric cooling steps from ``t0`` down to ``t_min``."""
    raw = math.log(params.t0 / params.t_min) / math.log(1.0 / params.cooling)
    # absorb rounding noise so exact powers do not gain a level
    return max(1, math.ceil(raw - 1e-9))


def simulated_annealing(objective: DepthObjective, cfg: ApproxConfig, rng: RngStream) -> None:
    """Metropolis walk over spherical caps with geometric cooling.

    The walk may accept worse directions; the objective keeps the global minimum.
    """
    params = cfg.annealing
    levels = temperature_levels(params)
    n_it = max(1, cfg.budget // levels)
    eps = (math.pi / 2) / params.cap_divisor
    logger.debug("annealing: %d levels x %d proposals, cap %.4g", levels, n_it, eps)

    current = objective.start_direction(params.start, rng)
    current_value = objective.evaluate(current)
    temperature = params.t0
    for _ in range(levels):
        for _ in range(n_it):
            proposal = rnd_spherical_cap(current, eps, rng)
            value = objective.evaluate(proposal)
            delta = value - current_value
            if delta <= 0.0 or rng.random() < math.exp(-delta / temperature):
                current, current_value = proposal, value
        temperature *= params.cooling
