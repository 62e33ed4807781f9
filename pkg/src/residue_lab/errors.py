"""Exception types raised by the library."""


class ResidueLabError(Exception):
    """Base class for all library errors."""


class NotOddPrime(ResidueLabError):
    """The modulus is even, composite, or below 3."""


class WrongResidueClass(ResidueLabError):
    """The operation needs p in a residue class the given prime is not in."""


class DuplicateResidues(ResidueLabError):
    """A quadruple contains repeated residues mod p."""


class PatternTooLong(ResidueLabError):
    """Pattern length exceeds p - 1."""


class NotIntegral(ResidueLabError):
    """An exact integer division has a remainder."""


class SingularCurve(ResidueLabError):
    """The defining polynomial is not squarefree mod p (bad reduction)."""


class UnknownCurve(ResidueLabError):
    """Curve id not in the registry."""


class EmptySample(ResidueLabError):
    """A statistic was requested for an empty sample."""


class OutOfDomain(ResidueLabError):
    """Argument outside the function's domain."""
