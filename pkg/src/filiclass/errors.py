"""Exception hierarchy shared by all filiclass modules."""

from __future__ import annotations


class FiliclassError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(FiliclassError):
    """Inverse or division by an exact zero."""


class ParseError(FiliclassError):
    """Malformed scalar text; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DimensionMismatch(FiliclassError):
    """Operands live in spaces of different dimensions."""


class ConstraintViolation(FiliclassError):
    """A dimension-8 parameter vector violates c34*(c23 + 2*c12) = 0."""


class NotInFamily(FiliclassError):
    """A tensor does not have the multiplication-table shape of the family.

    ``entry`` is the first offending (i, j, k) index triple, if known.
    """

    def __init__(self, message: str, entry: tuple[int, int, int] | None = None):
        if entry is not None:
            message = f"{message} at gamma[{entry[0]}][{entry[1]}][{entry[2]}]"
        super().__init__(message)
        self.entry = entry


class InvalidElementary(FiliclassError):
    """Elementary transform payload violates its invariants."""


class DegenerateTransform(FiliclassError):
    """Transform coefficients violate the nondegeneracy condition."""


class SingularTransform(FiliclassError):
    """The transported basis vectors are linearly dependent."""


class SubsetMismatch(FiliclassError):
    """Invariants were requested for a subset the vector does not belong to."""


class ArityMismatch(FiliclassError):
    """Wrong number of lambda values for a subset's parameterization."""


class DomainViolation(FiliclassError):
    """A lambda value is zero where the parameterization requires nonzero."""


class NoSubsetMatched(FiliclassError):
    """Internal error: the subset predicates failed to cover a vector."""
