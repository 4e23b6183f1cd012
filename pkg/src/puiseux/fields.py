"""Coefficient field descriptors: the rationals and prime fields F_p.

Coefficients are plain values: `Fraction` over Q, residues in [0, p) over
F_p.  The descriptor supplies the arithmetic so polynomial code can stay
field-generic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rationals import is_prime


@dataclass(frozen=True)
class Rationals:
    characteristic = 0

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero")
        return 1 / Fraction(a)

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def characteristic(self):
        return self.p

    def coerce(self, value):
        if isinstance(value, Fraction) and value.denominator != 1:
            num, den = value.numerator, value.denominator
            if den % self.p == 0:
                raise DomainError(f"denominator {den} not invertible mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError("division by zero")
        return pow(a, -1, self.p)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def __repr__(self):
        return f"F_{self.p}"


QQ = Rationals()

FieldDescriptor = Rationals | PrimeField
