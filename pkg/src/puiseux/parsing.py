"""Text grammars for rationals, monoid specs, and Puiseux polynomials.

Rational literal: "a/b" or "a" (denominator omitted when 1).

Monoid specs:
    fg: g1, g2, ...          finitely generated
    pr: a1/p1, a2/p2 [; tail]   prime reciprocal (tail = 1/p beyond the list)
    qplus                    all nonnegative rationals
    ppr: p                   union of <1/p^n>
    biprime: p, q            generated by the 1/(p^i q^j)
    powers: p, q             generated by the 1/p^n and 1/q^n

Polynomials: terms joined by + or -, term = [coeff *] X [^ exponent] | coeff,
exponent = integer | (a/b).  "^" binds tighter than "*"; unary minus is only
a coefficient sign.  Example: X^(3/2) + 2*X^(1/2) + 2.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MonoidValidationError, ParseError
from .fields import FieldDescriptor, Rationals
from .monoid import (
    BiPrimeDivisible,
    FinitelyGenerated,
    MonoidSpec,
    PrimePowerPair,
    PrimePowerReciprocal,
    PrimeReciprocal,
    QNonneg,
)
from .poly import PuiseuxPoly, canonicalize


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def try_consume(self, ch: str) -> bool:
        self.skip_ws()
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])


def parse_rational(text: str) -> Fraction:
    """Nonnegative rational literal "a/b" or "a"."""
    cur = _Cursor(text)
    q = _rational(cur)
    if not cur.at_end():
        raise ParseError("trailing input after rational", cur.pos)
    return q


def _rational(cur: _Cursor) -> Fraction:
    num = cur.integer()
    if cur.try_consume("/"):
        at = cur.pos
        den = cur.integer()
        if den == 0:
            raise ParseError("zero denominator", at)
        return Fraction(num, den)
    return Fraction(num)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# monoid specs


def parse_monoid(text: str) -> MonoidSpec:
    cur = _Cursor(text)
    cur.skip_ws()
    start = cur.pos
    while cur.pos < len(cur.text) and cur.text[cur.pos].isalpha():
        cur.pos += 1
    keyword = cur.text[start : cur.pos]
    if not keyword:
        raise ParseError("expected a monoid family keyword", start)

    if keyword == "qplus":
        if not cur.at_end():
            raise ParseError("qplus takes no parameters", cur.pos)
        return QNonneg()

    cur.expect(":")
    if keyword == "fg":
        gens = [_positive_rational(cur)]
        while cur.try_consume(","):
            gens.append(_positive_rational(cur))
        _require_end(cur)
        return FinitelyGenerated(gens)
    if keyword == "pr":
        pairs = [_pr_pair(cur)]
        while cur.try_consume(","):
            pairs.append(_pr_pair(cur))
        tail = False
        if cur.try_consume(";"):
            cur.skip_ws()
            word_start = cur.pos
            while cur.pos < len(cur.text) and cur.text[cur.pos].isalpha():
                cur.pos += 1
            if cur.text[word_start : cur.pos] != "tail":
                raise ParseError("expected 'tail' after ';'", word_start)
            tail = True
        _require_end(cur)
        return PrimeReciprocal(pairs, tail=tail)
    if keyword == "ppr":
        p = cur.integer()
        _require_end(cur)
        return PrimePowerReciprocal(p)
    if keyword in ("biprime", "powers"):
        p = cur.integer()
        cur.expect(",")
        q = cur.integer()
        _require_end(cur)
        return BiPrimeDivisible(p, q) if keyword == "biprime" else PrimePowerPair(p, q)
    raise ParseError(f"unknown monoid family {keyword!r}", start)


def _require_end(cur: _Cursor):
    if not cur.at_end():
        raise ParseError("trailing input", cur.pos)


def _positive_rational(cur: _Cursor) -> Fraction:
    q = _rational(cur)
    if q <= 0:
        raise MonoidValidationError(f"generator must be positive, got {q}")
    return q


def _pr_pair(cur: _Cursor) -> tuple[int, int]:
    # parsed textually as a/p so an unreduced pair like 4/2 is caught by the
    # family validation instead of silently reducing
    a = cur.integer()
    cur.expect("/")
    p = cur.integer()
    return a, p


def format_monoid(M: MonoidSpec) -> str:
    if isinstance(M, QNonneg):
        return "qplus"
    if isinstance(M, FinitelyGenerated):
        return "fg: " + ", ".join(format_rational(g) for g in M.generators)
    if isinstance(M, PrimeReciprocal):
        body = "pr: " + ", ".join(f"{a}/{p}" for a, p in M.pairs)
        return body + "; tail" if M.tail else body
    if isinstance(M, PrimePowerReciprocal):
        return f"ppr: {M.p}"
    if isinstance(M, BiPrimeDivisible):
        return f"biprime: {M.p}, {M.q}"
    if isinstance(M, PrimePowerPair):
        return f"powers: {M.p}, {M.q}"
    raise ValueError(f"unknown monoid spec {M!r}")


# ---------------------------------------------------------------------------
# polynomials


def parse_poly(text: str, field: FieldDescriptor) -> PuiseuxPoly:
    """Parse into canonical form; over F_p coefficients reduce mod p."""
    cur = _Cursor(text)
    terms = []
    sign = -1 if cur.try_consume("-") else 1
    terms.append(_term(cur, sign, field))
    while True:
        cur.skip_ws()
        if cur.at_end():
            break
        if cur.try_consume("+"):
            terms.append(_term(cur, 1, field))
        elif cur.try_consume("-"):
            terms.append(_term(cur, -1, field))
        else:
            raise ParseError("expected '+' or '-' between terms", cur.pos)
    return canonicalize(terms, field)


def _term(cur: _Cursor, sign: int, field) -> tuple[Fraction, object]:
    cur.skip_ws()
    at = cur.pos
    if cur.peek() == "X":
        return _xfactor(cur), field.coerce(sign)
    if not cur.peek().isdigit():
        raise ParseError("expected a term", at)
    coeff = _rational(cur)
    if cur.try_consume("*"):
        cur.skip_ws()
        if cur.peek() != "X":
            raise ParseError("expected 'X' after '*'", cur.pos)
        return _xfactor(cur), field.coerce(sign * coeff)
    return Fraction(0), field.coerce(sign * coeff)


def _xfactor(cur: _Cursor) -> Fraction:
    cur.expect("X")
    if not cur.try_consume("^"):
        return Fraction(1)
    cur.skip_ws()
    at = cur.pos
    if cur.try_consume("("):
        neg = cur.try_consume("-")
        num = cur.integer()
        cur.expect("/")
        den_at = cur.pos
        den = cur.integer()
        cur.expect(")")
        if den == 0:
            raise ParseError("zero denominator in exponent", den_at)
        if neg:
            raise ParseError("negative exponents are not allowed", at)
        return Fraction(num, den)
    neg = cur.try_consume("-")
    n = cur.integer()
    if neg:
        raise ParseError("negative exponents are not allowed", at)
    return Fraction(n)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    return str(c)


def format_poly(f: PuiseuxPoly) -> str:
    """Canonical text form; parse_poly(format_poly(f)) == f."""
    if f.is_zero():
        return "0"
    rational = isinstance(f.field, Rationals)
    pieces = []
    for i, (q, c) in enumerate(f.terms):
        negative = rational and c < 0
        mag = -c if negative else c
        if q == 0:
            body = _coeff_str(mag)
        else:
            x = "X" if q == 1 else (f"X^{q}" if q.denominator == 1 else f"X^({q.numerator}/{q.denominator})")
            body = x if mag == 1 else f"{_coeff_str(mag)}*{x}"
        if i == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
