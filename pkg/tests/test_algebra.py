import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from puiseux.algebra import (
    UNIT,
    UNKNOWN,
    factor_in_algebra,
    frobenius_pth_root,
    is_irreducible,
    is_irreducible_integral,
    is_unit,
    monomial_is_irreducible,
    uufd_check,
)
from puiseux.errors import (
    DomainError,
    ExponentNotInMonoidError,
    UnsupportedFieldError,
    UnsupportedMonoidError,
)
from puiseux.fields import QQ, PrimeField
from puiseux.monoid import (
    BiPrimeDivisible,
    FinitelyGenerated,
    PrimePowerPair,
    PrimePowerReciprocal,
    QNonneg,
    is_atom,
)
from puiseux.poly import PuiseuxPoly, canonicalize, eisenstein_applies, is_primitive

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def qpoly(terms):
    return canonicalize(terms, QQ)


class TestUnits:
    def test_constants_are_units(self):
        assert is_unit(qpoly([(0, 5)]))
        assert is_unit(canonicalize([(0, 2)], F3))

    def test_non_units(self):
        assert not is_unit(qpoly([(Q(1, 2), 1)]))
        assert not is_unit(PuiseuxPoly.zero(QQ))


class TestMonomials:
    def test_examples(self):
        assert monomial_is_irreducible(FinitelyGenerated([2, 3]), 2)
        assert not monomial_is_irreducible(QNonneg(), Q(1, 2))
        assert monomial_is_irreducible(FinitelyGenerated([1]), 1)

    def test_membership_gate(self):
        with pytest.raises(DomainError):
            monomial_is_irreducible(FinitelyGenerated([2, 3]), Q(1, 2))

    def test_agreement_with_is_irreducible_on_cyclic(self):
        M = FinitelyGenerated([Q(2, 3)])
        for k in (1, 2, 3):
            mono = canonicalize([(k * Q(2, 3), 1)], QQ)
            verdict = is_irreducible(mono, M, K=3)
            assert verdict.certified == monomial_is_irreducible(M, k * Q(2, 3))
            assert verdict.certified == is_atom(M, k * Q(2, 3))


class TestBoundedCertification:
    def test_single_inflation_insufficient(self):
        f = qpoly([(Q(1, 2), 1), (0, -1)])
        assert is_irreducible(f, QNonneg(), K=1).certified

    def test_k4_finds_the_split(self):
        f = qpoly([(Q(1, 2), 1), (0, -1)])
        verdict = is_irreducible(f, QNonneg(), K=4)
        assert verdict.reducible
        g, h = verdict.witness
        assert g * h == f
        assert {g, h} == {
            qpoly([(Q(1, 4), 1), (0, -1)]),
            qpoly([(Q(1, 4), 1), (0, 1)]),
        }

    def test_eisenstein_family_certifies(self):
        for q in (Q(5, 7), Q(3, 4), Q(7, 12), Q(1, 2)):
            f = qpoly([(q, 1), (0, 2)])
            assert is_irreducible(f, QNonneg(), K=6).certified

    def test_ppr_eisenstein(self):
        f = qpoly([(Q(1, 2), 1), (0, 2)])
        assert is_irreducible(f, PrimePowerReciprocal(2), K=6).certified

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            is_irreducible(PuiseuxPoly.zero(QQ), QNonneg())

    def test_exponent_gate(self):
        with pytest.raises(ExponentNotInMonoidError):
            is_irreducible(qpoly([(Q(1, 5), 1), (0, 1)]), PrimePowerReciprocal(2))

    def test_unit_verdict(self):
        assert is_irreducible(qpoly([(0, 3)]), QNonneg()).status == UNIT

    def test_witness_reinflates_to_polynomial_factorization(self):
        # forward soundness: inflating the witness at a common multiple gives
        # a genuine factorization of f(X^m)
        from puiseux.poly import inflate, support
        from puiseux.rationals import denominator_lcm

        f = qpoly([(Q(1, 2), 1), (0, -1)])
        verdict = is_irreducible(f, QNonneg(), K=4)
        g, h = verdict.witness
        m = denominator_lcm(support(f) + support(g) + support(h))
        a, b, c = inflate(f, m), inflate(g, m), inflate(h, m)
        prod = [0] * (len(b) + len(c) - 1)
        for i, bi in enumerate(b):
            for j, cj in enumerate(c):
                prod[i + j] += bi * cj
        assert prod == a

    def test_non_root_closed_witness(self):
        M = PrimePowerPair(2, 3)
        f = qpoly([(Q(1, 2), 1), (0, 2)]) * qpoly([(Q(1, 3), 1), (0, 3)])
        verdict = is_irreducible(f, M, K=4)
        assert verdict.reducible
        g, h = verdict.witness
        assert g * h == f

    def test_non_root_closed_eisenstein_certificate(self):
        # the Eisenstein/Gauss route does not need root-closedness
        M = PrimePowerPair(2, 3)
        verdict = is_irreducible(qpoly([(Q(5, 6), 1), (0, 2)]), M, K=2)
        assert verdict.certified

    def test_non_root_closed_unknown(self):
        # X^(1/2) + 1 over <1/2^n, 1/3^n>: the m = 6 inflation factors but
        # its deflations leave the monoid, and Eisenstein has nothing to say
        M = PrimePowerPair(2, 3)
        verdict = is_irreducible(qpoly([(Q(1, 2), 1), (0, 1)]), M, K=4)
        assert verdict.status == UNKNOWN

    def test_cyclic_complete_decision(self):
        M = FinitelyGenerated([Q(1, 3)])
        f = qpoly([(Q(2, 3), 1), (0, -1)])
        verdict = is_irreducible(f, M, K=1)
        assert verdict.reducible
        g, h = verdict.witness
        assert g * h == f
        assert is_irreducible(qpoly([(Q(1, 3), 1), (0, -1)]), M, K=1).certified


class TestIntegralIrreducibility:
    def test_primitive_eisenstein(self):
        assert is_irreducible_integral(qpoly([(Q(1, 3), 1), (0, 2)]), QNonneg(), K=4).certified

    def test_imprimitive(self):
        verdict = is_irreducible_integral(qpoly([(Q(1, 2), 2), (0, 4)]), QNonneg(), K=4)
        assert verdict.reducible
        g, h = verdict.witness
        assert g.is_constant() and g.leading_coefficient() == 2
        assert g * h == qpoly([(Q(1, 2), 2), (0, 4)])

    def test_reducible_passthrough(self):
        assert is_irreducible_integral(qpoly([(Q(1, 2), 1), (0, -1)]), QNonneg(), K=4).reducible

    def test_eisenstein_soundness(self):
        # spec invariant: Eisenstein + primitive => never Reducible
        rng = random.Random(99)
        for _ in range(25):
            den = rng.choice([2, 3, 4, 6])
            num = rng.randint(1, 8)
            p = rng.choice([2, 3, 5])
            lead = rng.choice([1, p + 1, 2 * p + 1])
            mid_exp = Q(num, den) / 2
            f = canonicalize(
                [(Q(num, den), lead), (mid_exp, p * rng.randint(0, 3)), (0, p * rng.choice([1, p - 1]))],
                QQ,
            )
            if not eisenstein_applies(f, p) or not is_primitive(f):
                continue
            verdict = is_irreducible_integral(f, QNonneg(), K=4)
            assert not verdict.reducible, (f, p, verdict)


class TestFactorInAlgebra:
    def test_recovers_constructed_product(self):
        M = PrimePowerReciprocal(2)
        f1 = qpoly([(Q(1, 2), 1), (0, 2)])
        f2 = qpoly([(Q(1, 4), 1), (0, 2)])
        out = factor_in_algebra(f1 * f2, M, K=6, D=8)
        assert out.status == "unique_factorization"
        assert uufd_check(f1 * f2, [f1, f2], list(out.atoms), QQ)
        assert len(out.atoms) == 2

    def test_unit_element(self):
        out = factor_in_algebra(qpoly([(0, 7)]), QNonneg())
        assert out.status == "unit" and out.unit == 7

    def test_reconstruction_exact(self):
        M = PrimePowerReciprocal(2)
        f = qpoly([(Q(1, 2), 2), (0, 3)]) * qpoly([(Q(1, 4), 1), (0, 5)])
        out = factor_in_algebra(f, M, K=6, D=8)
        assert out.status == "unique_factorization"
        prod = PuiseuxPoly.constant(QQ, out.unit)
        for g in out.atoms:
            prod = prod * g
        assert prod == f

    def test_monomial_descends_forever(self):
        out = factor_in_algebra(qpoly([(Q(1, 2), 1)]), QNonneg(), K=4, D=5)
        assert out.status == "no_atomic_factorization"
        assert not out.frobenius_certificate  # evidence only over Q

    def test_char2_frobenius_certificate(self):
        M = BiPrimeDivisible(2, 3)
        f = canonicalize([(Q(1, 3), 1), (0, 1)], F2)
        out = factor_in_algebra(f, M, K=4, D=5)
        assert out.status == "no_atomic_factorization"
        assert out.depth == 5
        assert out.frobenius_certificate

    def test_non_root_closed_rejected(self):
        with pytest.raises(UnsupportedMonoidError):
            factor_in_algebra(qpoly([(Q(1, 2), 1), (0, 1)]), PrimePowerPair(2, 3))

    def test_cyclic_complete(self):
        M = FinitelyGenerated([Q(1, 3)])
        f = qpoly([(Q(2, 3), 1), (0, -1)])
        out = factor_in_algebra(f, M)
        assert out.status == "unique_factorization"
        assert len(out.atoms) == 2

    def test_cap_exceeded_status(self):
        f = qpoly([(Q(1, 2), 1), (0, 2)])
        out = factor_in_algebra(f, PrimePowerReciprocal(2), max_degree=0)
        assert out.status == "cap_exceeded"

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_in_algebra(PuiseuxPoly.zero(QQ), QNonneg())

    def test_uufd_random_products(self):
        # the U-UFD property at desk scale: random products of certified
        # irreducibles come back unchanged, up to order and units
        M = PrimePowerReciprocal(2)
        rng = random.Random(4242)
        for _ in range(12):
            parts = []
            for _ in range(rng.randint(2, 3)):
                k = rng.randint(1, 3)
                c = rng.choice([2, 3, 5, 6, 7])
                parts.append(qpoly([(Q(1, 2**k), 1), (0, c)]))
            f = PuiseuxPoly.constant(QQ, 1)
            for g in parts:
                f = f * g
            out = factor_in_algebra(f, M, K=6, D=8)
            assert out.status == "unique_factorization"
            assert uufd_check(f, parts, list(out.atoms), QQ)


class TestUUFDCheck:
    def setup_method(self):
        self.g = qpoly([(Q(1, 2), 1), (0, 2)])
        self.h = qpoly([(Q(1, 4), 1), (0, 3)])
        self.f = self.g * self.h

    def test_permutation(self):
        assert uufd_check(self.f, [self.g, self.h], [self.h, self.g], QQ)

    def test_unit_scaling(self):
        assert uufd_check(
            self.f,
            [self.g, self.h],
            [self.g.scale(2), self.h.scale(Q(1, 2))],
            QQ,
        )

    def test_differing_lengths(self):
        f2 = self.f * self.g
        assert not uufd_check(f2, [self.g * self.g, self.h], [self.g, self.g, self.h], QQ)

    def test_reconstruction_failure(self):
        with pytest.raises(DomainError):
            uufd_check(self.f, [self.g, self.g], [self.g, self.h], QQ)

    def test_constant_factors_rejected(self):
        with pytest.raises(DomainError):
            uufd_check(self.f, [self.g, qpoly([(0, 2)])], [self.g, self.h], QQ)

    def test_mod_p_side(self):
        g = canonicalize([(Q(1, 3), 1), (0, 1)], F5)
        h = canonicalize([(Q(1, 3), 2), (0, 3)], F5)
        f = g * h
        assert uufd_check(f, [g, h], [h.scale(2), g.scale(3)], F5)


class TestFrobenius:
    def test_paper_example(self):
        M = BiPrimeDivisible(2, 3)
        f = canonicalize([(Q(1, 3), 1), (0, 1)], F2)
        root = frobenius_pth_root(f, M)
        assert root == canonicalize([(Q(1, 6), 1), (0, 1)], F2)
        assert root * root == f

    def test_f3_example(self):
        M = BiPrimeDivisible(3, 5)
        f = canonicalize([(1, 1), (0, 1)], F3)
        root = frobenius_pth_root(f, M)
        assert root == canonicalize([(Q(1, 3), 1), (0, 1)], F3)
        assert root**3 == f

    def test_constant(self):
        for c in range(1, 5):
            f = canonicalize([(0, c)], F5)
            assert frobenius_pth_root(f, QNonneg()) == f

    def test_rationals_rejected(self):
        with pytest.raises(UnsupportedFieldError):
            frobenius_pth_root(qpoly([(1, 1)]), QNonneg())

    def test_divisibility_gate(self):
        # 1/2 / 2 = 1/4 is fine in PPR(2); (1/3)/2 is not in PPR(3)
        f = canonicalize([(Q(1, 3), 1), (0, 1)], F2)
        with pytest.raises(ExponentNotInMonoidError):
            frobenius_pth_root(f, PrimePowerReciprocal(3))

    @given(
        st.sampled_from([2, 3, 5]),
        st.lists(
            st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=1, max_value=9)),
            min_size=1,
            max_size=4,
        ),
    )
    @settings(max_examples=50, deadline=None)
    def test_pth_root_property(self, p, raw_terms):
        field = PrimeField(p)
        M = QNonneg()
        terms = [(Q(n, 6), c) for n, c in raw_terms]
        f = canonicalize(terms, field)
        if f.is_zero():
            return
        root = frobenius_pth_root(f, M)
        assert root**p == f
