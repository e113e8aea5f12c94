"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ToleranceError(RuntimeError):
    """A requested accuracy cannot be delivered.

    Raised when no admissible term count reaches the requested tolerance,
    or when the tolerance lies below the round-off floor of double
    precision at the evaluation point.
    """
