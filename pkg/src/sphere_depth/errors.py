"""Exception hierarchy and the shared CLI error-reporting helper."""

from __future__ import annotations

import logging

logger = logging.getLogger(__name__)


class SphereDepthError(Exception):
    """Base class for every error raised by sphere_depth."""


class DimensionMismatch(SphereDepthError, ValueError):
    """Vectors or datasets of incompatible dimensions were combined."""


class DegenerateGeodesic(SphereDepthError):
    """The great circle through two (nearly) parallel points is undefined."""


class DegenerateMean(SphereDepthError):
    """The coordinatewise average of sphere points is (numerically) zero."""


class GridTooCoarse(SphereDepthError):
    """The budget cannot hold a grid with at least two values per angle."""


class BudgetExhausted(SphereDepthError):
    """The evaluation budget is used up. Signals the optimizer to stop."""


class SingularCovariance(SphereDepthError):
    """The sample covariance matrix is not (numerically) invertible."""


class LpNumericalFailure(SphereDepthError):
    """The zonoid linear program did not terminate with an optimal or infeasible status."""


class DataTooSmall(SphereDepthError):
    """The sample has fewer points than the algorithm requires."""


class ExactNonPositive(SphereDepthError):
    """A relative error was requested against an exact depth of zero."""


class UnsupportedExact(SphereDepthError):
    """No exact algorithm is available for the requested notion and dimension."""


class DataFormatError(SphereDepthError):
    """An input file could not be parsed."""


class ConfigError(SphereDepthError):
    """An experiment configuration failed to load or validate."""


def log_and_return_error(*, command: str, exc: BaseException, user_message: str) -> str:
    """Log full exception details while returning a safe user-facing message."""
    logger.debug("Command '%s' failed", command, exc_info=exc)
    return user_message
