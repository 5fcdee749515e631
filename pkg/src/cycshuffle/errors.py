"""Exception hierarchy shared by every module of the package."""


class CycShuffleError(Exception):
    """Base class for all errors raised by cycshuffle."""


class DomainError(CycShuffleError, ValueError):
    """An argument lies outside the domain of an operation."""


class DisjointnessError(DomainError):
    """Two operands that must be letter-disjoint share a letter."""


class OrientationError(DomainError):
    """The global maximum letter sits in the second operand instead of the first."""


class ResourceGuardError(CycShuffleError):
    """A requested enumeration exceeds its configured size bound."""


class IntegralityError(CycShuffleError, ArithmeticError):
    """A closed form that must be an integer evaluated to a proper fraction."""
