"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(ValueError):
    """A series parameter sits on a pole and the series does not terminate."""


class NonConvergenceError(ArithmeticError):
    """An iteration or series failed to converge within its cap."""


class StateError(RuntimeError):
    """An operation was applied to an object in an unsupported state."""


class StepFailureError(ArithmeticError):
    """Adaptive step control could not meet the requested tolerance."""
