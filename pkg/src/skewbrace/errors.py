"""Exception types shared across the package."""


class SkewbraceError(Exception):
    """Base class for all package errors."""


class NotSquarefree(SkewbraceError):
    """An integer required to be squarefree has a repeated prime factor."""


class NotCoprime(SkewbraceError):
    """An argument required to be a unit modulo m is not coprime to m."""


class InvalidTriple(SkewbraceError):
    """A (d, e, k) triple does not describe a group of squarefree order."""


class OwnerMismatch(SkewbraceError):
    """Two elements or maps that must live over the same group do not."""


class OrderMismatch(SkewbraceError):
    """Two groups required to have equal order do not."""


class CongruenceFails(SkewbraceError):
    """A closed-form table does not apply because a prime congruence fails."""

    def __init__(self, violated):
        self.violated = list(violated)
        super().__init__("congruence condition(s) not satisfied: " + "; ".join(self.violated))


class GammaNotDividing(SkewbraceError):
    """gamma does not divide e, so the regular-subgroup machinery is vacuous."""


class ShapeError(SkewbraceError):
    """A holomorph element does not have the shape an operation requires."""


class BoundExceeded(SkewbraceError):
    """A requested enumeration is above the configured size bound."""


class NotRegular(SkewbraceError):
    """A subgroup expected to act regularly does not."""


class NotAGroup(SkewbraceError):
    """An element set expected to be closed under multiplication is not."""


class NonIntegral(SkewbraceError):
    """A weighted count that must be an integer is not; implementation bug."""
