"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PuiseuxError(Exception):
    """Base class for all library errors."""


class DomainError(PuiseuxError):
    """An argument lies outside the mathematical domain of the operation."""


class NotMemberError(DomainError):
    """The element does not belong to the monoid."""


class TrivialMonoidError(DomainError):
    """The operation requires a nontrivial monoid but got {0}."""


class UnsupportedFamilyError(DomainError):
    """The monoid family does not support this operation."""


class NoAtomsError(DomainError):
    """The monoid is antimatter, so there is nothing to factor over."""


class MonoidValidationError(DomainError):
    """Family parameters violate the family invariants (non-prime modulus, repeated prime, ...)."""


class ExponentNotInMonoidError(DomainError):
    """A polynomial exponent fell outside the exponent monoid."""

    def __init__(self, exponent, message=None):
        self.exponent = exponent
        super().__init__(message or f"exponent {exponent} is not in the monoid")


class UnsupportedFieldError(DomainError):
    """The coefficient field is not valid for this operation."""


class UnsupportedMonoidError(DomainError):
    """The operation's hypotheses exclude this monoid (e.g. it is not root-closed)."""


class CapExceededError(PuiseuxError):
    """A configured size cap (inflation degree, search bound) was exceeded."""


class ParseError(PuiseuxError):
    """Syntax error in a text input; `offset` is the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
