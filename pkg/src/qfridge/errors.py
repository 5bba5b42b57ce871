"""Exception hierarchy for the refrigerator toolkit.

Every error raised on purpose by this package derives from FridgeError, so
callers can catch one base class at the CLI boundary and map it to an exit
code.
"""


class FridgeError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FridgeError):
    """Invalid or inconsistent run configuration (bad key, bad range)."""


class SingularRatesError(FridgeError):
    """Reset-rate combination with a vanishing denominator (e.g. two of
    three rates zero): the q_i / Q_jk combinations are undefined."""


class DegenerateKernelError(FridgeError):
    """The 64x64 generator has a kernel of dimension != 1, so there is no
    unique steady state to return."""


class IntegrationError(FridgeError):
    """Trajectory invariants (trace / Hermiticity / positivity drift)
    exceeded their thresholds; usually means the step size is too large."""


class UndefinedChiError(FridgeError):
    """chi = Q_c/tau is undefined because tau = 0 (initial state already
    stationary, e.g. at the Carnot point with no coherence)."""


class PoleError(FridgeError):
    """A closed-form expression was evaluated at a pole of its rational
    structure (vanishing denominator)."""


class BoundaryMaximumError(FridgeError):
    """The grid scan found the largest value at an endpoint of the bracket:
    there is no interior maximum to refine."""
