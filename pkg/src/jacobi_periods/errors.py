"""Exception types shared across the package."""


class JacobiPeriodsError(Exception):
    """Base class for all library errors."""


class DeterminantError(JacobiPeriodsError):
    """Matrix part of a group element does not have determinant one."""


class DimensionError(JacobiPeriodsError):
    """Lattice vectors have mismatched or unsupported dimension."""


class TruncationError(JacobiPeriodsError):
    """A series tail bound could not be met within the term budget."""


class QuadratureError(JacobiPeriodsError):
    """Adaptive quadrature failed to reach the requested accuracy."""


class PoleProximityError(JacobiPeriodsError):
    """Evaluation point is too close to a pole of the target function."""


class DerivativeError(JacobiPeriodsError):
    """Numerical differentiation error estimate exceeded its budget."""


class MissingGeneratorError(JacobiPeriodsError):
    """A word token has no assigned multiplier or period data."""


class DuplicateNameError(JacobiPeriodsError):
    """An integral was registered twice under one name."""


class ContextMismatchError(JacobiPeriodsError):
    """Functions combined under incompatible automorphy contexts."""


class PreconditionError(JacobiPeriodsError):
    """A numerically checked hypothesis failed before the main computation."""


class ConfigError(JacobiPeriodsError):
    """Invalid suite configuration."""


class UnknownFunctionError(JacobiPeriodsError):
    """Requested function name is not registered for CLI evaluation."""
