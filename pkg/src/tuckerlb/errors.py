"""Exception types shared across the package."""


class InputDomainError(ValueError):
    """The caller passed an input outside the documented domain."""


class ContractViolationError(RuntimeError):
    """A documented precondition of an internal operation was violated."""


class NotConnectedError(ContractViolationError):
    """Two rows expected to share an overlap component do not."""


class ClassificationError(ValueError):
    """A matrix or graph matches none of the canonical forbidden families."""


class InvariantViolationError(RuntimeError):
    """An internal invariant failed; indicates a bug upstream of the raiser."""
