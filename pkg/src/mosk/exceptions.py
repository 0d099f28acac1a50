"""Exception hierarchy shared across the library."""


class MoskError(Exception):
    """Base class for all library-specific failures."""


class DimensionMismatch(MoskError):
    """Operands live in spaces of different dimension."""


class DomainError(MoskError):
    """An argument lies outside the mathematical domain of the operation."""


class NumericalFailure(MoskError):
    """A numerical routine (root finder, inverse solver) did not converge."""


class StepSizeOutOfRange(MoskError):
    """Forward-backward step size outside the admissible interval."""


class UnsupportedOperator(MoskError):
    """The operator does not expose the data required by the operation."""


class SequenceOverflow(MoskError):
    """A lazily extended sequence was requested beyond its configured cap."""
