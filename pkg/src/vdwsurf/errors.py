"""Exception types shared across the package."""


class VdwError(Exception):
    """Base class for all vdwsurf errors."""


class ParameterError(VdwError, ValueError):
    """A model, geometry or scan parameter violates its contract."""


class UnsupportedModelError(VdwError, TypeError):
    """The operation needs a different material model kind."""


class SingularityError(VdwError, ArithmeticError):
    """Evaluation was requested at (or within roundoff of) a pole."""


class QuadratureError(VdwError, RuntimeError):
    """Adaptive integration did not reach the requested tolerance.

    Carries the best available result so callers can inspect how far the
    integration got.
    """

    def __init__(self, message, value=None, error_estimate=None, panels=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.panels = panels


class ConfigError(VdwError, ValueError):
    """A run configuration is malformed.  `field` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class ValidityWarning(UserWarning):
    """The requested geometry strains the near-field (nonretarded) regime."""
