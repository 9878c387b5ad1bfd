"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateObservableError(DomainError):
    """Both the variance parameter and the scale constant vanish."""


class SpecError(ValueError):
    """A model specification is malformed (nonpositive rates, bad schema, ...)."""


class TruncationFailure(RuntimeError):
    """No truncation below the configured cap met the tail-mass target."""


class NumericFailure(RuntimeError):
    """An eigensolve or linear solve did not reach its accuracy target."""


class StateCapExceeded(RuntimeError):
    """A simulated path left the configured state window."""
