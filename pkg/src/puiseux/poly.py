"""Canonical-form elements of F[M]: finite sums of monomials with rational
exponents, kept with strictly decreasing exponents and nonzero coefficients.

Also the bridge to ordinary polynomials (inflate/deflate), the content and
primitivity machinery over Z, and the extended Eisenstein test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError, ExponentNotInMonoidError
from .fields import FieldDescriptor, Rationals
from .monoid import MonoidSpec, contains
from .rationals import require_prime


@dataclass(frozen=True)
class PuiseuxPoly:
    """Element of F[M] in canonical form.

    ``terms`` is a tuple of (exponent, coefficient) pairs with exponents
    strictly decreasing and coefficients nonzero; the zero element is the
    empty tuple.  Instances are immutable; build them with
    :func:`canonicalize` or the classmethods.
    """

    field: FieldDescriptor
    terms: tuple[tuple[Fraction, object], ...]

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "PuiseuxPoly":
        return cls(field, ())

    @classmethod
    def constant(cls, field: FieldDescriptor, value) -> "PuiseuxPoly":
        return canonicalize([(Fraction(0), value)], field)

    @classmethod
    def monomial(cls, field: FieldDescriptor, exponent, coefficient=1) -> "PuiseuxPoly":
        return canonicalize([(exponent, coefficient)], field)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_coefficient(self):
        if not self.terms:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def trailing_exponent(self) -> Fraction:
        if not self.terms:
            raise DomainError("zero polynomial has no trailing exponent")
        return self.terms[-1][0]

    def coefficient(self, exponent) -> object:
        exponent = Fraction(exponent)
        for q, c in self.terms:
            if q == exponent:
                return c
        return self.field.zero

    # -- arithmetic ---------------------------------------------------

    def _check_same_field(self, other: "PuiseuxPoly") -> None:
        if self.field != other.field:
            raise DomainError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        self._check_same_field(other)
        return canonicalize(list(self.terms) + list(other.terms), self.field)

    def __neg__(self) -> "PuiseuxPoly":
        F = self.field
        return PuiseuxPoly(F, tuple((q, F.neg(c)) for q, c in self.terms))

    def __sub__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        return self + (-other)

    def __mul__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        self._check_same_field(other)
        F = self.field
        acc: dict[Fraction, object] = {}
        for q1, c1 in self.terms:
            for q2, c2 in other.terms:
                e = q1 + q2
                acc[e] = F.add(acc.get(e, F.zero), F.mul(c1, c2))
        return canonicalize(acc.items(), F)

    def __pow__(self, n: int) -> "PuiseuxPoly":
        if n < 0:
            raise DomainError("negative powers are not defined in F[M]")
        out = PuiseuxPoly.constant(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c) -> "PuiseuxPoly":
        F = self.field
        c = F.coerce(c)
        return canonicalize([(q, F.mul(coef, c)) for q, coef in self.terms], F)


def canonicalize(terms, field: FieldDescriptor) -> PuiseuxPoly:
    """Merge like exponents, drop zeros, sort strictly decreasing.

    Exponents must be nonnegative rationals; coefficients are coerced into
    the field (residues reduced mod p over a prime field).
    """
    acc: dict[Fraction, object] = {}
    for exponent, coefficient in terms:
        q = Fraction(exponent)
        if q < 0:
            raise DomainError(f"negative exponent {q}")
        c = field.coerce(coefficient)
        if q in acc:
            acc[q] = field.add(acc[q], c)
        else:
            acc[q] = c
    cleaned = tuple(
        (q, c) for q, c in sorted(acc.items(), reverse=True) if c != field.zero
    )
    return PuiseuxPoly(field, cleaned)


def add(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    return f + g


def mul(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    return f * g


def degree(f: PuiseuxPoly) -> Fraction:
    """Leading exponent; the zero element has none."""
    if f.is_zero():
        raise DomainError("degree of the zero element is undefined")
    return f.terms[0][0]


def support(f: PuiseuxPoly) -> list[Fraction]:
    """Exponent list, decreasing."""
    return [q for q, _ in f.terms]


# ---------------------------------------------------------------------------
# Inflate / deflate


def inflate(f: PuiseuxPoly, m: int) -> list:
    """Coefficients (ascending) of the ordinary polynomial f(X^m).

    m must be a common multiple of the exponent denominators, so that every
    m*q is an integer.
    """
    if m <= 0:
        raise DomainError(f"inflation factor must be positive, got {m}")
    for q, _ in f.terms:
        if (q * m).denominator != 1:
            raise DomainError(f"{m} is not a common multiple of the supports ({q})")
    if f.is_zero():
        return []
    n = int(degree(f) * m)
    coeffs = [f.field.zero] * (n + 1)
    for q, c in f.terms:
        coeffs[int(q * m)] = c
    return coeffs


def deflate(coefficients, m: int, M: MonoidSpec, field: FieldDescriptor) -> PuiseuxPoly:
    """g(X^(1/m)) for an ordinary polynomial given by ascending coefficients.

    Every produced exponent k/m is checked for membership in M; the first
    offender is reported in the error.
    """
    if m <= 0:
        raise DomainError(f"deflation factor must be positive, got {m}")
    terms = []
    for k, c in enumerate(coefficients):
        c = field.coerce(c)
        if c == field.zero:
            continue
        q = Fraction(k, m)
        if not contains(M, q):
            raise ExponentNotInMonoidError(q)
        terms.append((q, c))
    return canonicalize(terms, field)


# ---------------------------------------------------------------------------
# Content and Eisenstein over Z


def _integer_coefficients(f: PuiseuxPoly) -> list[int]:
    if not isinstance(f.field, Rationals):
        raise DomainError("content machinery is defined over integer coefficients in Q[M]")
    out = []
    for _, c in f.terms:
        if c.denominator != 1:
            raise DomainError(f"coefficient {c} is not an integer; clear denominators first")
        out.append(c.numerator)
    return out


def content(f: PuiseuxPoly) -> int:
    """gcd of the (integer) coefficients, as the positive representative."""
    coeffs = _integer_coefficients(f)
    if not coeffs:
        raise DomainError("content of the zero element is undefined")
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def is_primitive(f: PuiseuxPoly) -> bool:
    return content(f) == 1


def clear_rational_coefficients(f: PuiseuxPoly) -> tuple[PuiseuxPoly, Fraction]:
    """Rewrite f = multiplier * g with g having integer coefficients.

    The multiplier is 1/lcm(denominators); content extraction is left to the
    caller so the two concerns stay separate.
    """
    if not isinstance(f.field, Rationals):
        raise DomainError("only Q-coefficient elements can be cleared")
    if f.is_zero():
        return f, Fraction(1)
    L = lcm(*(c.denominator for _, c in f.terms))
    return f.scale(L), Fraction(1, L)


def eisenstein_applies(f: PuiseuxPoly, p: int) -> bool:
    """Extended Eisenstein test at the prime p for integer-coefficient f.

    True iff p does not divide the leading coefficient, divides every other
    coefficient, and p^2 does not divide the trailing one.  The criterion
    presumes a nonzero constant term: if the trailing exponent is positive a
    monomial factors out and the test reports False (inapplicable).
    """
    require_prime(p)
    coeffs = _integer_coefficients(f)
    if len(coeffs) < 2:
        return False  # constants and monomials are out of shape
    if f.trailing_exponent() != 0:
        return False  # X^{q_min} factors out; criterion inapplicable
    lead, low = coeffs[0], coeffs[-1]
    if lead % p == 0:
        return False
    if any(c % p for c in coeffs[1:]):
        return False
    return low % (p * p) != 0
