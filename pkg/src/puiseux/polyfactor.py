"""Univariate polynomial factorization over prime fields and over Z/Q.

Over F_p: squarefree decomposition, distinct-degree splitting via the
Frobenius map on a precomputed monomial base, and seeded Cantor-Zassenhaus
equal-degree splitting, so the output is deterministic bit-for-bit.

Over Z: the big-prime variant of the Zassenhaus method.  A single prime p
exceeding twice the Mignotte coefficient bound is chosen with the input
squarefree mod p; factors mod p are recombined by exhaustive subsets with
symmetric lifting, and every candidate is confirmed by exact trial division
in Z[x], so reported factorizations are sound unconditionally and complete
by the coefficient bound.

Polynomials are dense coefficient lists in ascending degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm

from .errors import CapExceededError, DomainError
from .fields import FieldDescriptor, PrimeField, Rationals
from .rationals import next_prime, require_prime

DEFAULT_DEGREE_CAP = 64


def _exact_int(v) -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    raise DomainError(f"expected an integer coefficient, got {v!r}")


@dataclass(frozen=True)
class IntegerPolynomial:
    """Coefficients ascending; empty tuple is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        c = [_exact_int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return IntegerPolynomial(_z_mul(list(self.coeffs), list(other.coeffs)))

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntegerPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial([-v for v in self.coeffs])

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)


@dataclass(frozen=True)
class ModPolynomial:
    """Residue coefficients ascending, reduced mod the prime modulus."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p, coeffs):
        require_prime(p)
        c = [_exact_int(v) % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        if self.p != other.p:
            raise DomainError("modulus mismatch")
        return ModPolynomial(self.p, _mul(list(self.coeffs), list(other.coeffs), self.p))


# ---------------------------------------------------------------------------
# mod-p kernels (lists ascending, always trimmed)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c: list[int]) -> int:
    return len(c) - 1


def _add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _mul_ground(a, c, p):
    c %= p
    return [] if c == 0 else _trim([v * c % p for v in a])


def _divmod(a, b, p):
    if not b:
        raise DomainError("polynomial division by zero")
    a = a[:]
    db, da = _deg(b), _deg(a)
    if da < db:
        return [], _trim(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        coef = a[db + k] * inv_lead % p
        if coef:
            q[k] = coef
            for j in range(db + 1):
                a[k + j] = (a[k + j] - coef * b[j]) % p
    return _trim(q), _trim(a[:db])


def _rem(a, b, p):
    return _divmod(a, b, p)[1]


def _quo(a, b, p):
    return _divmod(a, b, p)[0]


def _monic(a, p):
    if not a:
        return 0, []
    lc = a[-1]
    if lc == 1:
        return 1, a[:]
    return lc, _mul_ground(a, pow(lc, -1, p), p)


def _gcd(a, b, p):
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)[1]


def _diff(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _pow_mod(base, e, mod, p):
    result = [1]
    base = _rem(base, mod, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, p), mod, p)
    return result


def _frobenius_base(f, p):
    # base[i] = x^(p*i) mod f, enabling g |-> g(x^p) mod f in O(n^2) mults
    n = _deg(f)
    base = [[1]]
    if n > 1:
        b1 = _pow_mod([0, 1], p, f, p)
        base.append(b1)
        for _ in range(2, n):
            base.append(_rem(_mul(base[-1], b1, p), f, p))
    return base


def _frobenius_map(g, base, f, p):
    out = []
    for i, gi in enumerate(g):
        if gi:
            out = _add(out, _mul_ground(base[i], gi, p), p)
    return _rem(out, f, p)


def _sqf_list_mod(f, p):
    """Squarefree decomposition of a monic f over F_p -> [(monic, mult)].

    Handles vanishing derivatives through p-th roots: over the prime field
    the root of g(x^p) is obtained by striding coefficients (c^(1/p) = c).
    """
    factors = []
    n = 1
    while True:
        d = _diff(f, p)
        if d:
            g = _gcd(f, d, p)
            h = _quo(f, g, p)
            i = 1
            while _deg(h) >= 1:
                G = _gcd(g, h, p)
                H = _quo(h, G, p)
                if _deg(H) >= 1:
                    factors.append((H, i * n))
                g = _quo(g, G, p)
                h = G
                i += 1
            if _deg(g) == 0:
                return factors
            f = g
        f = f[::p]
        n *= p


def _ddf(f, p):
    """Distinct-degree split of monic squarefree f -> [(product, degree)]."""
    factors = []
    base = _frobenius_base(f, p)
    g = [0, 1]
    i = 1
    while 2 * i <= _deg(f):
        g = _frobenius_map(g, base, f, p)
        h = _gcd(f, _sub(g, [0, 1], p), p)
        if _deg(h) >= 1:
            factors.append((h, i))
            f = _quo(f, h, p)
            if _deg(f) == 0:
                return factors
            g = _rem(g, f, p)
            if 2 * (i + 1) <= _deg(f):
                base = _frobenius_base(f, p)
        i += 1
    if _deg(f) >= 1:
        factors.append((f, _deg(f)))
    return factors


def _edf(f, n, p, rng):
    """Cantor-Zassenhaus equal-degree split into monic irreducibles of degree n."""
    if _deg(f) <= n:
        return [f]
    while True:
        r = _trim([rng.randrange(p) for _ in range(_deg(f))])
        if _deg(r) < 1:
            continue
        if p == 2:
            h = r
            sq = r
            for _ in range(n - 1):
                sq = _rem(_mul(sq, sq, p), f, p)
                h = _add(h, sq, p)
            g = _gcd(f, h, p)
        else:
            h = _pow_mod(r, (p**n - 1) // 2, f, p)
            g = _gcd(f, _sub(h, [1], p), p)
        if 0 < _deg(g) < _deg(f):
            return _edf(g, n, p, rng) + _edf(_quo(f, g, p), n, p, rng)


def factor_mod_p(f: ModPolynomial) -> list[tuple[ModPolynomial, int]]:
    """Monic irreducible factorization over F_p.

    The product of the returned factors (with multiplicity) times the leading
    coefficient of f equals f.  Output order is deterministic: sorted by
    degree, then coefficients; equal-degree splitting draws from a PRNG
    seeded by the input.
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    p = f.p
    work = list(f.coeffs)
    if _deg(work) < 1:
        return []
    rng = random.Random(f"edf:{p}:{f.coeffs}")
    _, monic = _monic(work, p)
    out = []
    for sqf, mult in _sqf_list_mod(monic, p):
        for part, deg in _ddf(sqf, p):
            for irr in _edf(part, deg, p, rng):
                out.append((ModPolynomial(p, irr), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


# ---------------------------------------------------------------------------
# integer-coefficient helpers


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _z_content(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _z_primitive(a):
    """(content with the sign of the leading coefficient, primitive part)."""
    a = _trim(list(a))
    if not a:
        return 0, []
    c = _z_content(a)
    if a[-1] < 0:
        c = -c
    return c, [v // c for v in a]


def _z_divide_exact(a, b):
    """Quotient a/b in Z[x], or None when b does not divide a exactly."""
    a = list(a)
    db, da = _deg(b), _deg(a)
    if not b:
        raise DomainError("polynomial division by zero")
    if da < db:
        return None
    q = [0] * (da - db + 1)
    lead = b[-1]
    for k in range(da - db, -1, -1):
        num = a[db + k]
        if num % lead:
            return None
        coef = num // lead
        q[k] = coef
        if coef:
            for j in range(db + 1):
                a[k + j] -= coef * b[j]
    return q if not any(a) else None


def _q_divide_exact(a, b):
    # division in Q[x] assuming exactness (used inside Yun where it holds)
    a = [Fraction(v) for v in a]
    db = _deg(b)
    q = [Fraction(0)] * (_deg(a) - db + 1)
    inv = 1 / Fraction(b[-1])
    for k in range(len(q) - 1, -1, -1):
        coef = a[db + k] * inv
        q[k] = coef
        if coef:
            for j in range(db + 1):
                a[k + j] -= coef * b[j]
    return q


def _q_gcd(a, b):
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]

    def rem(u, v):
        dv = _deg(v)
        inv = 1 / v[-1]
        u = u[:]
        while _deg(u) >= dv:
            coef = u[-1] * inv
            k = _deg(u) - dv
            for j in range(dv + 1):
                u[k + j] -= coef * v[j]
            u = _trim(u)
            if not u:
                break
        return u

    while b:
        a, b = b, rem(a, b)
    if a:
        inv = 1 / a[-1]
        a = [v * inv for v in a]
    return a


def _q_diff(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _yun_squarefree(a):
    """Yun squarefree decomposition of a primitive integer polynomial.

    Returns [(primitive squarefree part, multiplicity)]; exact arithmetic in
    Q[x], with each output re-primitivized over Z.
    """
    f = [Fraction(v) for v in a]
    fp = _q_diff(f)
    g = _q_gcd(f, fp)
    if _deg(g) == 0:
        return [(a, 1)]
    out = []
    b = _q_divide_exact(f, g)
    c = _q_divide_exact(fp, g)
    d = _trim([x - y for x, y in zip_longest_frac(c, _q_diff(b))])
    i = 1
    while _deg(b) >= 1:
        h = _q_gcd(b, d)
        if _deg(h) >= 1:
            _, prim = _z_primitive(_q_to_int(h))
            out.append((prim, i))
        b = _q_divide_exact(b, h)
        c = _q_divide_exact(d, h)
        d = _trim([x - y for x, y in zip_longest_frac(c, _q_diff(b))])
        i += 1
    return out


def zip_longest_frac(a, b):
    n = max(len(a), len(b))
    zero = Fraction(0)
    for i in range(n):
        yield (a[i] if i < len(a) else zero), (b[i] if i < len(b) else zero)


def _q_to_int(a):
    L = lcm(*(v.denominator for v in a)) if a else 1
    return [int(v * L) for v in a]


def _ceil_sqrt(n: int) -> int:
    s = isqrt(n)
    return s if s * s == n else s + 1


def mignotte_bound(coeffs) -> int:
    """Coefficient bound for lc(f)-scaled factors of f: sqrt(n+1) 2^n A |lc|."""
    n = _deg(list(coeffs))
    A = max(abs(c) for c in coeffs)
    return _ceil_sqrt(n + 1) * (1 << n) * A * abs(coeffs[-1])


def _eisenstein_screen(a) -> bool:
    # sufficient-condition fast path: any prime dividing all non-leading
    # coefficients, but not the leading one and not twice the constant one,
    # certifies irreducibility.  Candidate primes come from a cheap partial
    # factorization of the gcd; missing some only costs speed, never truth.
    if len(a) < 3 or a[0] == 0:
        return False
    g = abs(_z_content(a[:-1]))
    if g == 0:
        return False
    from .rationals import is_prime, primes_up_to

    candidates = []
    for r in primes_up_to(10_000):
        if g % r == 0:
            candidates.append(r)
            while g % r == 0:
                g //= r
    if g > 1 and is_prime(g):
        candidates.append(g)
    lead, const = a[-1], a[0]
    return any(lead % r and const % (r * r) for r in candidates)


def _symmetric(v: int, p: int) -> int:
    v %= p
    return v - p if 2 * v > p else v


def _factor_squarefree_z(a):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    if _deg(a) == 1:
        return [a]
    if _eisenstein_screen(a):
        return [a]
    # try a few admissible primes and keep the one with fewest modular
    # factors; subset recombination is exponential in that count
    p = next_prime(2 * mignotte_bound(a) + 1)
    best = None
    attempts = 0
    while attempts < 4:
        fb = [v % p for v in a]
        if _deg(_gcd(fb, _diff(fb, p), p)) == 0:
            attempts += 1
            modular = [list(g.coeffs) for g, _ in factor_mod_p(ModPolynomial(p, a))]
            if best is None or len(modular) < len(best[1]):
                best = (p, modular)
            if len(best[1]) <= 3:
                break
        p = next_prime(p)
    p, modular = best
    if len(modular) == 1:
        return [a]

    factors = []
    remaining = a[:]
    lead = remaining[-1]
    indices = list(range(len(modular)))
    s = 1
    while 2 * s <= len(indices):
        found = True
        while found:
            found = False
            trailing = remaining[0]
            for subset in combinations(indices, s):
                # cheap filter: the candidate's constant term must divide the
                # constant term of lc * remaining
                tc = lead % p
                for i in subset:
                    tc = tc * modular[i][0] % p
                tc = _symmetric(tc, p)
                if trailing != 0 and (tc == 0 or (lead * trailing) % tc):
                    continue
                prod = [lead % p]
                for i in subset:
                    prod = _mul(prod, modular[i], p)
                cand = _trim([_symmetric(v, p) for v in prod])
                if not cand:
                    continue
                _, cand = _z_primitive(cand)
                quot = _z_divide_exact(remaining, cand)
                if quot is not None:
                    factors.append(cand)
                    remaining = _trim(quot)
                    lead = remaining[-1]
                    indices = [i for i in indices if i not in subset]
                    found = bool(indices) and 2 * s <= len(indices)
                    break
        s += 1
    if _deg(remaining) >= 1:
        _, prim = _z_primitive(remaining)
        factors.append(prim)
    return factors


def factor_over_integers(
    f: IntegerPolynomial, max_degree: int = DEFAULT_DEGREE_CAP
) -> tuple[int, list[tuple[IntegerPolynomial, int]]]:
    """Factor f in Z[x] as content * product of primitive irreducibles.

    The returned content carries the sign; every factor has a positive
    leading coefficient.  The degree cap converts runaway inflations into a
    clean CapExceededError.
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise CapExceededError(f"degree {f.degree} exceeds the cap {max_degree}")
    cont, prim = _z_primitive(list(f.coeffs))
    if _deg(prim) < 1:
        return cont, []
    out = []
    for part, mult in _yun_squarefree(prim):
        for irr in _factor_squarefree_z(part):
            out.append((IntegerPolynomial(irr), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return cont, out


def is_irreducible_poly(f, field: FieldDescriptor) -> bool:
    """Irreducibility over Q (IntegerPolynomial input) or F_p (ModPolynomial)."""
    if isinstance(field, Rationals):
        if not isinstance(f, IntegerPolynomial):
            raise DomainError("expected an IntegerPolynomial over Q")
        if f.degree < 1:
            raise DomainError("irreducibility is defined for nonconstant polynomials")
        _, factors = factor_over_integers(f)
        return len(factors) == 1 and factors[0][1] == 1
    if isinstance(field, PrimeField):
        if not isinstance(f, ModPolynomial) or f.p != field.p:
            raise DomainError("expected a ModPolynomial over the same prime field")
        if f.degree < 1:
            raise DomainError("irreducibility is defined for nonconstant polynomials")
        factors = factor_mod_p(f)
        return len(factors) == 1 and factors[0][1] == 1
    raise DomainError(f"unsupported field {field!r}")
