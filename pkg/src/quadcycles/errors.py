"""Exception types shared across the package."""


class QuadCyclesError(ValueError):
    """Base class for all package errors."""


class DomainError(QuadCyclesError):
    """A quantity is evaluated where it is undefined (e.g. a Schwarzian at 0)."""


class PreconditionError(QuadCyclesError):
    """An operation was called outside its parameter range."""


class DegenerateConjugacyError(PreconditionError):
    """The affine conjugacy h(x) = -r x + r/2 is not invertible (r == 0)."""
