"""Exception hierarchy.

Configuration problems and numerical failures are kept in separate
families so the CLI can map them to distinct exit codes.
"""


class ConfigError(ValueError):
    """Invalid or inconsistent user input (config file, cloud spec, flags)."""


class RegimeError(ValueError):
    """An asymptotic formula was requested outside its validity regime."""


class NearFieldError(ValueError):
    """Pair separations below the near-field cutoff of the coupling kernels."""


class PoleError(ZeroDivisionError):
    """Evaluation exactly at the declared pole of the EIT susceptibility."""


class NumericalError(RuntimeError):
    """Base class for runtime numerical failures (CLI exit code 3)."""


class ConvergenceError(NumericalError):
    """An iterative scheme or quadrature failed to reach its tolerance."""


class SingularMatrixError(NumericalError):
    """Coupling matrix is numerically singular."""


class NoWindowError(NumericalError):
    """Spectrum has no measurable transparency window at half height."""
