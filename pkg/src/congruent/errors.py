"""Exception hierarchy shared by every module of the package."""


class CongruentError(ValueError):
    """Base class for all domain errors raised by this package."""


class DomainError(CongruentError):
    """Argument outside the domain of an operation (e.g. factorizing 0)."""


class InvalidParameters(CongruentError):
    """Generator parameters violate a stated constraint."""


# the closing-example entry point uses the singular spelling
InvalidParameter = InvalidParameters


class NotRepresentable(CongruentError):
    """Integer has no representation of the requested form."""


class NotQuadraticIrrational(CongruentError):
    """``sqrt(d)`` is rational, so it has no periodic continued fraction."""


class Unsolvable(CongruentError):
    """The requested Pell equation has no integer solution."""


class NotAdmissible(CongruentError):
    """``d`` is not of the form 2 * (distinct primes = 1 mod 4)."""


class WrongResidue(CongruentError):
    """``d`` lies in the excluded residue class 2 mod 4."""


class ScaleNotSquare(CongruentError):
    """A triangle's area is not a rational square multiple of the target.

    Signals a construction bug; never expected from the built-in paths.
    """
