# =============================================================================
## @file    Errors.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Exceptions raised by the random-set lab.
# =============================================================================

class RandomSetLabError(Exception):
    """RandomSetLabError

    Base class of every error raised
    by the lab.
    """

class DomainError(RandomSetLabError, ValueError):
    """DomainError

    A numeric argument lies outside
    the domain of a formula.
    """

class InvalidWindowError(DomainError):
    """InvalidWindowError

    Restriction window is empty, reversed,
    or not contained in the horizon.
    """

class QuadratureError(RandomSetLabError, ArithmeticError):
    """QuadratureError

    Adaptive quadrature failed to reach
    the requested tolerance.
    """

class DegenerateTiltError(RandomSetLabError, ArithmeticError):
    """DegenerateTiltError

    Exponential tilt whose normalizer is
    too small to sample by rejection.
    """

class FitError(RandomSetLabError, ArithmeticError):
    """FitError

    Log-log slope fit is degenerate
    (too few points or poor r2).
    """

class ConfigError(RandomSetLabError, ValueError):
    """ConfigError

    Missing or malformed run configuration.
    """

class UnknownCheckError(RandomSetLabError, KeyError):
    """UnknownCheckError

    Requested check id is not registered.
    """

# end =========================================================================
