"""Exact nonnegative rationals, p-adic valuations, and number-theoretic plumbing.

Rationals are carried by `fractions.Fraction`, which is always stored in
lowest terms with a positive denominator, so n(q) and d(q) are just the
`numerator` and `denominator` attributes of a validated value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .errors import DomainError

#: Marker returned by :func:`padic_valuation` on input 0.  Comparisons and
#: min() behave correctly against ordinary integer valuations.
INFINITE_VALUATION = math.inf


def reduce(num: int, den: int) -> Fraction:
    """Build the reduced nonnegative rational num/den.

    The gcd cancellation itself is done by `Fraction`; this wrapper enforces
    the domain (den > 0, num >= 0).
    """
    if den <= 0:
        raise DomainError(f"denominator must be positive, got {den}")
    if num < 0:
        raise DomainError(f"numerator must be nonnegative, got {num}")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to a nonnegative Fraction."""
    q = Fraction(value)
    if q < 0:
        raise DomainError(f"expected a nonnegative rational, got {q}")
    return q


def is_prime(n: int) -> bool:
    """Primality test, exact for machine-size inputs and BPSW-class beyond."""
    return bool(gmpy2.is_prime(n)) if n >= 2 else False


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    return int(gmpy2.next_prime(n))


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p


def int_valuation(p: int, n: int) -> int:
    """Multiplicity of the prime p in the nonzero integer n."""
    if n == 0:
        raise DomainError("valuation of 0 requested on an integer path")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(p: int, q) -> int | float:
    """p-adic valuation of a nonnegative rational.

    For q > 0 this is v_p(n(q)) - v_p(d(q)); for q = 0 it is the infinite
    marker.  Multiplicativity v_p(rs) = v_p(r) + v_p(s) and the ultrametric
    bound v_p(r+s) >= min(v_p(r), v_p(s)) hold by construction.
    """
    require_prime(p)
    q = as_rational(q)
    if q == 0:
        return INFINITE_VALUATION
    return int_valuation(p, q.numerator) - int_valuation(p, q.denominator)


def denominator_lcm(rationals) -> int:
    """lcm of the denominators of a finite collection; 1 on the empty one."""
    return math.lcm(*(as_rational(q).denominator for q in rationals)) if rationals else 1


def modular_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m, in [0, m)."""
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    if math.gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible modulo {m}")
    return pow(a % m, -1, m)


@lru_cache(maxsize=256)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes <= bound, increasing. Empty below 2."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(sieve[i * i :: i]))
    return tuple(i for i in range(2, bound + 1) if sieve[i])


def _pollard_rho(n: int, seed: int = 1) -> int:
    # Brent's cycle variant; n odd composite, not a prime power of interest.
    while True:
        c = seed
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        seed += 1


def factorize(n: int) -> dict[int, int]:
    """Full prime factorization of a positive integer.

    Trial division by small primes, then Pollard rho with primality checks.
    Intended for the moderate integers this library meets (denominators,
    coefficient gcds), not for cryptographic sizes.
    """
    if n <= 0:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in primes_up_to(10_000):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        if n == 1:
            return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def is_squarefree(n: int) -> bool:
    if n <= 0:
        raise DomainError(f"squarefree test needs a positive integer, got {n}")
    return all(e == 1 for e in factorize(n).values())
