"""Exact computation in Puiseux monoids and their semigroup algebras.

Monoid side: membership, canonical decompositions, atoms, factorization
sets, root closure, atomicity/antimatter predicates.  Algebra side:
canonical-form arithmetic in F[M], content and Eisenstein machinery over Z,
polynomial factorization engines over Q and F_p, and bounded irreducibility
certification plus unique-factorization checking in F[M].
"""

from .errors import (
    CapExceededError,
    DomainError,
    ExponentNotInMonoidError,
    MonoidValidationError,
    NoAtomsError,
    NotMemberError,
    ParseError,
    PuiseuxError,
    TrivialMonoidError,
    UnsupportedFamilyError,
    UnsupportedFieldError,
    UnsupportedMonoidError,
)
from .fields import QQ, FieldDescriptor, PrimeField, Rationals
from .monoid import (
    AllRationals,
    AtomsResult,
    BiPrimeDivisible,
    ChainReport,
    Decomposition,
    DenseBiPrime,
    DensePrime,
    DenseSquarefree,
    FactorizationSet,
    FinitelyGenerated,
    MonoidSpec,
    PrimePowerPair,
    PrimePowerReciprocal,
    PrimeReciprocal,
    QNonneg,
    atoms,
    contains,
    decompose,
    denominator_prime_set,
    difference_group_generator,
    divides,
    factorizations,
    has_zero_limit_point,
    is_antimatter,
    is_atom,
    is_atomic,
    is_isomorphic_to_naturals,
    is_root_closed,
    is_trivial,
    root_closure_fg,
    verify_divisibility_chain,
)
from .poly import (
    PuiseuxPoly,
    canonicalize,
    clear_rational_coefficients,
    content,
    deflate,
    degree,
    eisenstein_applies,
    inflate,
    is_primitive,
    support,
)
from .polyfactor import (
    IntegerPolynomial,
    ModPolynomial,
    factor_mod_p,
    factor_over_integers,
    is_irreducible_poly,
    mignotte_bound,
)
from .algebra import (
    FactorOutcome,
    IrreducibilityVerdict,
    factor_in_algebra,
    frobenius_pth_root,
    is_irreducible,
    is_irreducible_integral,
    is_unit,
    monomial_is_irreducible,
    uufd_check,
)
from .rationals import (
    denominator_lcm,
    modular_inverse,
    padic_valuation,
    primes_up_to,
    reduce,
)
from .parsing import format_poly, format_rational, parse_monoid, parse_poly, parse_rational

__all__ = [name for name in dir() if not name.startswith("_")]
