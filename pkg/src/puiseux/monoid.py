"""Puiseux monoid families: membership, canonical decompositions, atoms,
divisibility, factorization sets, root closure, and atomicity predicates.

A Puiseux monoid is an additive submonoid of the nonnegative rationals.
Six families are supported, each with its own decision procedures:

* ``FinitelyGenerated(g1, ..., gk)`` -- membership reduces, after clearing
  denominators, to membership in a numerical semigroup, decided through the
  Apery set of the smallest generator.
* ``PrimeReciprocal(pairs, tail)`` -- generated by fractions a_i/p_i with
  pairwise distinct prime denominators; with ``tail`` set, additionally by
  1/p for every prime p not listed.  Every element has a unique normal form
  ``n + sum alpha_i * a_i/p_i`` with 0 <= alpha_i < p_i, and membership is
  decided by extracting those forced digits.
* ``QNonneg()`` -- all nonnegative rationals.
* ``PrimePowerReciprocal(p)`` -- union of <1/p^n>; denominators are powers
  of p.
* ``BiPrimeDivisible(p, q)`` -- generated by all 1/(p^i q^j); denominators
  are {p,q}-smooth.
* ``PrimePowerPair(p, q)`` -- generated by 1/p^n and 1/q^n for all n; not
  root-closed.  Membership is digit extraction from the highest power of
  each prime downward, with no borrowing.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Union

from .errors import (
    DomainError,
    MonoidValidationError,
    NoAtomsError,
    NotMemberError,
    TrivialMonoidError,
    UnsupportedFamilyError,
)
from .rationals import as_rational, factorize, is_prime, modular_inverse, primes_up_to

# ---------------------------------------------------------------------------
# Families


@dataclass(frozen=True)
class FinitelyGenerated:
    generators: tuple[Fraction, ...]

    def __init__(self, generators):
        gens = sorted({as_rational(g) for g in generators})
        if any(g <= 0 for g in gens):
            raise MonoidValidationError("generators must be positive")
        object.__setattr__(self, "generators", tuple(gens))


@dataclass(frozen=True)
class PrimeReciprocal:
    """Pairs (a_i, p_i) meaning the generator a_i/p_i; ``tail`` adds 1/p for
    every prime p outside the listed denominators."""

    pairs: tuple[tuple[int, int], ...]
    tail: bool = False

    def __init__(self, pairs, tail=False):
        norm = []
        seen = set()
        for a, p in pairs:
            if not is_prime(p):
                raise MonoidValidationError(f"denominator {p} is not prime")
            if p in seen:
                raise MonoidValidationError(f"prime denominator {p} repeated")
            if a <= 0:
                raise MonoidValidationError(f"numerator {a} must be positive")
            if a % p == 0:
                raise MonoidValidationError(f"{p} must not divide the numerator {a}")
            seen.add(p)
            norm.append((a, p))
        norm.sort(key=lambda ap: ap[1])
        object.__setattr__(self, "pairs", tuple(norm))
        object.__setattr__(self, "tail", bool(tail))

    @property
    def listed_generators(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, p) for a, p in self.pairs)


@dataclass(frozen=True)
class QNonneg:
    pass


@dataclass(frozen=True)
class PrimePowerReciprocal:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise MonoidValidationError(f"{self.p} is not prime")


def _validate_prime_pair(p: int, q: int) -> tuple[int, int]:
    if not (is_prime(p) and is_prime(q)):
        raise MonoidValidationError(f"{p}, {q} must both be prime")
    if p == q:
        raise MonoidValidationError("the two primes must be distinct")
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True)
class BiPrimeDivisible:
    p: int
    q: int

    def __init__(self, p, q):
        p, q = _validate_prime_pair(p, q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class PrimePowerPair:
    p: int
    q: int

    def __init__(self, p, q):
        p, q = _validate_prime_pair(p, q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


MonoidSpec = Union[
    FinitelyGenerated,
    PrimeReciprocal,
    QNonneg,
    PrimePowerReciprocal,
    BiPrimeDivisible,
    PrimePowerPair,
]

#: Families with no atoms at all.
_ANTIMATTER_FAMILIES = (QNonneg, PrimePowerReciprocal, BiPrimeDivisible, PrimePowerPair)


def is_trivial(M: MonoidSpec) -> bool:
    """True iff M is the trivial monoid {0}."""
    if isinstance(M, FinitelyGenerated):
        return not M.generators
    if isinstance(M, PrimeReciprocal):
        return not M.pairs and not M.tail
    return False


def _require_nontrivial(M: MonoidSpec) -> None:
    if is_trivial(M):
        raise TrivialMonoidError("operation requires a nontrivial monoid")


# ---------------------------------------------------------------------------
# Result records


@dataclass(frozen=True)
class Decomposition:
    """Normal form n + sum of digit * generator, digits below their modulus."""

    integer_part: int
    digits: tuple[tuple[Fraction, int], ...]

    def value(self) -> Fraction:
        return self.integer_part + sum((g * a for g, a in self.digits), Fraction(0))

    def digit_map(self) -> dict[Fraction, int]:
        return dict(self.digits)


@dataclass(frozen=True)
class AtomsResult:
    """Atom description: a finite list, optionally extended by the symbolic
    tail marker ("1/p for every unlisted prime p"), or antimatter."""

    atoms: tuple[Fraction, ...] = ()
    antimatter: bool = False
    tail_atoms: bool = False

    @property
    def is_finite(self) -> bool:
        return not self.antimatter and not self.tail_atoms


@dataclass(frozen=True)
class FactorizationSet:
    element: Fraction
    factorizations: frozenset[tuple[Fraction, ...]]
    lengths: frozenset[int]


@dataclass(frozen=True)
class ChainReport:
    ok: bool
    first_violation: int | None = None
    reason: str | None = None


@dataclass(frozen=True)
class AllRationals:
    """gp(M) = Q."""


@dataclass(frozen=True)
class DensePrime:
    """gp(M) = { n / p^r }."""

    p: int


@dataclass(frozen=True)
class DenseBiPrime:
    """gp(M) = { n / (p^r q^s) }."""

    p: int
    q: int


@dataclass(frozen=True)
class DenseSquarefree:
    """gp(M) = { n / s : s a squarefree product of the allowed primes }."""

    listed: tuple[int, ...] = ()
    all_primes: bool = False


DifferenceGroup = Union[Fraction, AllRationals, DensePrime, DenseBiPrime, DenseSquarefree]


# ---------------------------------------------------------------------------
# Numerical-semigroup membership (integer core of the finitely generated case)


@lru_cache(maxsize=1024)
def _apery_minima(coins: tuple[int, ...]) -> tuple[int, ...]:
    # coins: positive integers with gcd 1, sorted; returns, for each residue
    # r mod coins[0], the least semigroup element congruent to r.
    m = coins[0]
    if m > 10**7:
        raise DomainError("generators too large for exact membership")
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        val, r = heapq.heappop(heap)
        if dist[r] is not None and val > dist[r]:
            continue
        for c in coins:
            nr = (r + c) % m
            nv = val + c
            if dist[nr] is None or nv < dist[nr]:
                dist[nr] = nv
                heapq.heappush(heap, (nv, nr))
    return tuple(dist)


def semigroup_contains(coins, target: int) -> bool:
    """Does the numerical semigroup <coins> contain target?"""
    if target < 0:
        return False
    if target == 0:
        return True
    coins = sorted({int(c) for c in coins if c > 0})
    if not coins:
        return False
    g = 0
    for c in coins:
        g = gcd(g, c)
    if target % g:
        return False
    coins = tuple(c // g for c in coins)
    target //= g
    minima = _apery_minima(coins)
    return target >= minima[target % coins[0]]


def _fg_contains(generators: tuple[Fraction, ...], x: Fraction) -> bool:
    if x == 0:
        return True
    if not generators:
        return False
    L = lcm(*(g.denominator for g in generators))
    scaled = x * L
    if scaled.denominator != 1:
        return False
    return semigroup_contains([g * L for g in generators], scaled.numerator)


# ---------------------------------------------------------------------------
# Digit extraction


def _pr_extract(M: PrimeReciprocal, x: Fraction):
    """Forced digits of x against a PrimeReciprocal spec.

    Returns (digits, remainder) where digits maps each used generator to its
    coefficient in [1, p), and remainder = x - sum is a rational that is a
    nonnegative integer exactly when x is a member with that integer part.
    Returns None as soon as non-membership is certain (denominator shape).
    """
    d = x.denominator
    listed = {p: a for a, p in M.pairs}
    digits: dict[Fraction, int] = {}
    remainder = x
    if d > 1:
        try:
            primes = factorize(d)
        except DomainError:
            return None
        for r, mult in primes.items():
            if mult > 1:
                return None  # elements have squarefree denominators
            if r in listed:
                a = listed[r]
            elif M.tail:
                a = 1
            else:
                return None
            m = d // r
            alpha = (x.numerator * modular_inverse(a * m, r)) % r
            gen = Fraction(a, r)
            digits[gen] = alpha
            remainder -= alpha * gen
    return digits, remainder


def _pr_integer_part_ok(M: PrimeReciprocal, n: Fraction) -> bool:
    if n.denominator != 1 or n < 0:
        return False
    if M.tail:
        return True  # 1 = p * (1/p) for any unlisted prime
    return semigroup_contains([a for a, _ in M.pairs], n.numerator)


def _ppp_extract(M: PrimePowerPair, x: Fraction):
    """Digit extraction for <1/p^n, 1/q^n>, highest power first, no borrowing."""
    d = x.denominator
    rest = d
    for r in (M.p, M.q):
        while rest % r == 0:
            rest //= r
    if rest != 1:
        return None  # denominator not of the form p^a q^b
    digits: dict[Fraction, int] = {}
    y = x
    for r in (M.p, M.q):
        t = 0
        dd = d
        while dd % r == 0:
            dd //= r
            t += 1
        for i in range(t, 0, -1):
            power = r**i
            if y.denominator % power:
                continue  # digit forced to 0 at this level
            m = y.denominator // power
            alpha = (y.numerator * modular_inverse(m, r)) % r
            if alpha:
                digits[Fraction(1, power)] = alpha
                y -= Fraction(alpha, power)
    return digits, y


# ---------------------------------------------------------------------------
# Membership and decomposition


def contains(M: MonoidSpec, x) -> bool:
    """Decide x in M.  Negative x is a domain error."""
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"monoid elements are nonnegative, got {x}")
    if x == 0:
        return True
    if isinstance(M, QNonneg):
        return True
    if isinstance(M, PrimePowerReciprocal):
        d = x.denominator
        while d % M.p == 0:
            d //= M.p
        return d == 1
    if isinstance(M, BiPrimeDivisible):
        d = x.denominator
        for r in (M.p, M.q):
            while d % r == 0:
                d //= r
        return d == 1
    if isinstance(M, FinitelyGenerated):
        return _fg_contains(M.generators, x)
    if isinstance(M, PrimeReciprocal):
        got = _pr_extract(M, x)
        if got is None:
            return False
        _, remainder = got
        return _pr_integer_part_ok(M, remainder)
    if isinstance(M, PrimePowerPair):
        got = _ppp_extract(M, x)
        if got is None:
            return False
        _, remainder = got
        return remainder.denominator == 1 and remainder >= 0
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def decompose(M: MonoidSpec, x) -> Decomposition:
    """Unique normal form of x in a PrimeReciprocal or PrimePowerPair monoid.

    Digits are forced by congruences modulo each prime denominator, so the
    result is canonical; reconstruction is exact by construction.
    """
    x = as_rational(x)
    if isinstance(M, PrimeReciprocal):
        got = _pr_extract(M, x)
        if got is None or not _pr_integer_part_ok(M, got[1]):
            raise NotMemberError(f"{x} is not in the monoid")
        digits, remainder = got
    elif isinstance(M, PrimePowerPair):
        got = _ppp_extract(M, x)
        if got is None or got[1].denominator != 1 or got[1] < 0:
            raise NotMemberError(f"{x} is not in the monoid")
        digits, remainder = got
    else:
        raise UnsupportedFamilyError(
            "decompose is defined for PrimeReciprocal and PrimePowerPair monoids"
        )
    return Decomposition(
        integer_part=int(remainder),
        digits=tuple(sorted(digits.items())),
    )


# ---------------------------------------------------------------------------
# Atoms


def atoms(M: MonoidSpec) -> AtomsResult:
    """Atom set of M.

    FinitelyGenerated: the minimal generating set, obtained by discarding
    each generator expressible in the monoid of the others.  PrimeReciprocal:
    every listed a_i/p_i (an atom by the p_i-adic valuation argument), plus
    the symbolic tail marker when the tail is present.  The remaining
    families are antimatter.
    """
    if isinstance(M, _ANTIMATTER_FAMILIES):
        return AtomsResult(antimatter=True)
    if isinstance(M, FinitelyGenerated):
        gens = M.generators
        minimal = tuple(
            g
            for i, g in enumerate(gens)
            if not _fg_contains(gens[:i] + gens[i + 1 :], g)
        )
        return AtomsResult(atoms=minimal)
    if isinstance(M, PrimeReciprocal):
        return AtomsResult(atoms=M.listed_generators, tail_atoms=M.tail)
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def is_atom(M: MonoidSpec, q) -> bool:
    """Is q an atom of M (not a sum of two nonzero elements)?"""
    q = Fraction(q)
    if not contains(M, q) or q == 0:
        return False
    if isinstance(M, _ANTIMATTER_FAMILIES):
        return False
    if isinstance(M, FinitelyGenerated):
        return q in atoms(M).atoms
    if isinstance(M, PrimeReciprocal):
        if q in M.listed_generators:
            return True
        if M.tail and q.numerator == 1 and is_prime(q.denominator):
            return q.denominator not in {p for _, p in M.pairs}
        return False
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def divides(M: MonoidSpec, y, z) -> bool:
    """y | z in M, i.e. z = y + x for some x in M."""
    y, z = Fraction(y), Fraction(z)
    for v in (y, z):
        if not contains(M, v):
            raise DomainError(f"{v} is not in the monoid")
    return z >= y and contains(M, z - y)


def factorizations(M: MonoidSpec, x) -> FactorizationSet:
    """All multisets of atoms summing to x, with the induced length set.

    Only families with a finite atom set are enumerable: FinitelyGenerated
    and PrimeReciprocal without the tail.  With the tail, atoms (and the
    factorization sets of most members) are infinite.
    """
    x = as_rational(x)
    if isinstance(M, _ANTIMATTER_FAMILIES):
        raise NoAtomsError("antimatter monoid: no atoms to factor over")
    if isinstance(M, PrimeReciprocal) and M.tail:
        raise UnsupportedFamilyError("tail PrimeReciprocal has infinitely many atoms")
    if not contains(M, x):
        raise NotMemberError(f"{x} is not in the monoid")
    atom_list = sorted(atoms(M).atoms, reverse=True)

    found: set[tuple[Fraction, ...]] = set()

    def search(rest: Fraction, idx: int, chosen: list[Fraction]):
        if rest == 0:
            found.add(tuple(sorted(chosen)))
            return
        if idx == len(atom_list):
            return
        a = atom_list[idx]
        max_count = int(rest / a)
        for count in range(max_count, -1, -1):
            chosen.extend([a] * count)
            search(rest - count * a, idx + 1, chosen)
            del chosen[len(chosen) - count :]

    search(x, 0, [])
    return FactorizationSet(
        element=x,
        factorizations=frozenset(found),
        lengths=frozenset(len(z) for z in found),
    )


# ---------------------------------------------------------------------------
# Root closure, atomicity, structure invariants


def is_root_closed(M: MonoidSpec) -> bool:
    """Root-closed monoids here are exactly the ascending unions of cyclic
    monoids: the three dense families, and the cyclic finitely generated
    ones.  <1/p^n, 1/q^n> is the paper-style non-root-closed example."""
    if isinstance(M, (QNonneg, PrimePowerReciprocal, BiPrimeDivisible)):
        return True
    if isinstance(M, PrimePowerPair):
        return False
    if isinstance(M, FinitelyGenerated):
        return is_trivial(M) or len(atoms(M).atoms) == 1
    if isinstance(M, PrimeReciprocal):
        return len(M.pairs) == 1 and not M.tail
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def _fg_gcd_generator(generators: tuple[Fraction, ...]) -> Fraction:
    L = lcm(*(g.denominator for g in generators))
    g = 0
    for gen in generators:
        g = gcd(g, (gen * L).numerator)
    return Fraction(g, L)


def root_closure_fg(M: FinitelyGenerated) -> Fraction:
    """Generator d of the root closure <d> of a finitely generated monoid.

    gp(M) = dZ for d = gcd(L g_1, ..., L g_k)/L, and every nonnegative
    multiple of d is a root element, so the closure is cyclic on d.
    """
    if not isinstance(M, FinitelyGenerated):
        raise UnsupportedFamilyError("root_closure_fg needs a finitely generated spec")
    _require_nontrivial(M)
    return _fg_gcd_generator(M.generators)


def has_zero_limit_point(M: MonoidSpec) -> bool:
    if isinstance(M, _ANTIMATTER_FAMILIES):
        return True
    if isinstance(M, FinitelyGenerated):
        _require_nontrivial(M)
        return False
    if isinstance(M, PrimeReciprocal):
        _require_nontrivial(M)
        return M.tail  # 1/p -> 0 along the unlisted primes
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def is_atomic(M: MonoidSpec) -> bool:
    if isinstance(M, _ANTIMATTER_FAMILIES):
        return False
    _require_nontrivial(M)
    # finitely generated and prime reciprocal monoids are atomic (the latter
    # satisfy the ACCP)
    return True


def is_antimatter(M: MonoidSpec) -> bool:
    if isinstance(M, _ANTIMATTER_FAMILIES):
        return True
    _require_nontrivial(M)
    return False


def difference_group_generator(M: MonoidSpec) -> DifferenceGroup:
    """Generator of gp(M) when cyclic, else a symbolic density description."""
    _require_nontrivial(M)
    if isinstance(M, FinitelyGenerated):
        return _fg_gcd_generator(M.generators)
    if isinstance(M, PrimeReciprocal):
        if not M.tail:
            return _fg_gcd_generator(M.listed_generators)
        return DenseSquarefree(listed=tuple(p for _, p in M.pairs), all_primes=True)
    if isinstance(M, QNonneg):
        return AllRationals()
    if isinstance(M, PrimePowerReciprocal):
        return DensePrime(M.p)
    if isinstance(M, (BiPrimeDivisible, PrimePowerPair)):
        return DenseBiPrime(M.p, M.q)
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def verify_divisibility_chain(M: MonoidSpec, chain) -> ChainReport:
    """Check q1 + M strictly contained in q2 + M strictly contained in ...

    Step i covers the transition chain[i-1] -> chain[i]; each difference must
    be a nonzero element of M.
    """
    elems = [Fraction(q) for q in chain]
    for q in elems:
        if not contains(M, q):
            raise DomainError(f"{q} is not in the monoid")
    for i in range(1, len(elems)):
        diff = elems[i - 1] - elems[i]
        if diff == 0:
            return ChainReport(False, i, f"step {i} is not strict")
        if diff < 0 or not contains(M, diff):
            return ChainReport(False, i, f"difference {diff} at step {i} is not in the monoid")
    return ChainReport(True)


def denominator_prime_set(M: MonoidSpec, bound: int) -> frozenset[int]:
    """All primes <= bound dividing some denominator of a nonzero element.

    This is the invariant separating the paper-style algebra classes: a prime
    outside the set divides no element of d(M*).
    """
    small = primes_up_to(bound)
    if isinstance(M, QNonneg):
        return frozenset(small)
    if isinstance(M, PrimePowerReciprocal):
        return frozenset(p for p in (M.p,) if p <= bound)
    if isinstance(M, (BiPrimeDivisible, PrimePowerPair)):
        return frozenset(p for p in (M.p, M.q) if p <= bound)
    if isinstance(M, FinitelyGenerated):
        if is_trivial(M):
            return frozenset()
        L = lcm(*(g.denominator for g in M.generators))
        return frozenset(p for p in small if L % p == 0)
    if isinstance(M, PrimeReciprocal):
        if M.tail:
            return frozenset(small)
        return frozenset(p for _, p in M.pairs if p <= bound)
    raise UnsupportedFamilyError(f"unknown monoid spec {M!r}")


def is_isomorphic_to_naturals(M: MonoidSpec) -> bool:
    """True iff M is cyclic.  Equivalent, at the algebra level, to F[M]
    being half-factorial, and to F[M] being a PID / Euclidean / Dedekind."""
    _require_nontrivial(M)
    if isinstance(M, FinitelyGenerated):
        return len(atoms(M).atoms) == 1
    if isinstance(M, PrimeReciprocal):
        return len(M.pairs) == 1 and not M.tail
    return False
