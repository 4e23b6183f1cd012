import random

import pytest
from hypothesis import given, settings, strategies as st

from puiseux.errors import CapExceededError, DomainError
from puiseux.fields import QQ, PrimeField
from puiseux.polyfactor import (
    IntegerPolynomial,
    ModPolynomial,
    factor_mod_p,
    factor_over_integers,
    is_irreducible_poly,
    mignotte_bound,
)

from oracles import irreducible_table, poly_mul_mod, poly_mul_z


def rebuild_mod(f, factors):
    out = ModPolynomial(f.p, [f.leading()])
    for g, mult in factors:
        for _ in range(mult):
            out = out * g
    return out


def rebuild_z(cont, factors):
    out = IntegerPolynomial([cont])
    for g, mult in factors:
        for _ in range(mult):
            out = out * g
    return out


class TestFactorModP:
    def test_splits_by_roots(self):
        factors = factor_mod_p(ModPolynomial(3, [-1, 0, 1]))
        assert factors == [
            (ModPolynomial(3, [1, 1]), 1),
            (ModPolynomial(3, [2, 1]), 1),
        ]

    def test_irreducible_quadratic(self):
        factors = factor_mod_p(ModPolynomial(3, [1, 0, 1]))
        assert factors == [(ModPolynomial(3, [1, 0, 1]), 1)]

    def test_monomial(self):
        assert factor_mod_p(ModPolynomial(5, [0, 1])) == [(ModPolynomial(5, [0, 1]), 1)]

    def test_pth_power(self):
        factors = factor_mod_p(ModPolynomial(2, [1, 0, 0, 0, 1]))
        assert factors == [(ModPolynomial(2, [1, 1]), 4)]

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_mod_p(ModPolynomial(3, []))

    def test_deterministic(self):
        f = ModPolynomial(5, [3, 1, 4, 1, 5, 9, 2, 6, 1])
        assert factor_mod_p(f) == factor_mod_p(f)

    def test_brute_force_table_degree_up_to_4(self):
        # the spec's regression: engine agrees with a trial-division table
        from oracles import all_monic_polys

        for p in (2, 3):
            table = irreducible_table(p, 4)
            for deg in range(1, 5):
                for coeffs in all_monic_polys(p, deg):
                    f = ModPolynomial(p, coeffs)
                    if f.degree != deg:
                        continue
                    factors = factor_mod_p(f)
                    engine_irreducible = len(factors) == 1 and factors[0][1] == 1
                    assert engine_irreducible == (tuple(coeffs) in table), (p, coeffs)
                    assert rebuild_mod(f, factors) == f
                    assert all(tuple(g.coeffs) in table for g, _ in factors)

    @given(
        st.sampled_from([2, 3, 5, 101]),
        st.lists(st.integers(min_value=0, max_value=100), min_size=2, max_size=12),
    )
    @settings(max_examples=80)
    def test_roundtrip_random(self, p, coeffs):
        f = ModPolynomial(p, coeffs + [1])
        factors = factor_mod_p(f)
        assert rebuild_mod(f, factors) == f
        assert all(g.leading() == 1 for g, _ in factors)


class TestFactorOverIntegers:
    def test_difference_of_squares(self):
        cont, factors = factor_over_integers(IntegerPolynomial([-1, 0, 1]))
        assert cont == 1
        assert factors == [
            (IntegerPolynomial([-1, 1]), 1),
            (IntegerPolynomial([1, 1]), 1),
        ]

    def test_eisenstein_irreducible(self):
        cont, factors = factor_over_integers(IntegerPolynomial([2, 2, 1]))
        assert cont == 1 and factors == [(IntegerPolynomial([2, 2, 1]), 1)]

    def test_content_extraction(self):
        cont, factors = factor_over_integers(IntegerPolynomial([-6, 0, 6]))
        assert cont == 6
        assert factors == [
            (IntegerPolynomial([-1, 1]), 1),
            (IntegerPolynomial([1, 1]), 1),
        ]

    def test_sign_in_content(self):
        cont, factors = factor_over_integers(IntegerPolynomial([1, 0, -1]))
        assert cont == -1
        assert rebuild_z(cont, factors) == IntegerPolynomial([1, 0, -1])

    def test_multiplicity(self):
        f = IntegerPolynomial([1, 1]) * IntegerPolynomial([1, 1]) * IntegerPolynomial([-3, 1])
        cont, factors = factor_over_integers(f)
        assert rebuild_z(cont, factors) == f
        assert (IntegerPolynomial([1, 1]), 2) in factors

    def test_degree_cap(self):
        with pytest.raises(CapExceededError):
            factor_over_integers(IntegerPolynomial([1] * 70))
        # explicit cap override
        f = IntegerPolynomial([2] + [0] * 65 + [1])  # X^66 + 2
        cont, factors = factor_over_integers(f, max_degree=80)
        assert cont == 1 and factors == [(f, 1)]

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_over_integers(IntegerPolynomial([]))

    def test_cyclotomic_like(self):
        # X^4 + X^3 + X^2 + X + 1 (irreducible), times X - 1
        f = IntegerPolynomial([1, 1, 1, 1, 1]) * IntegerPolynomial([-1, 1])
        cont, factors = factor_over_integers(f)
        assert sorted(g.degree for g, _ in factors) == [1, 4]

    def test_random_products_roundtrip(self):
        rng = random.Random(2024)
        for _ in range(60):
            parts = []
            for _ in range(rng.randint(2, 3)):
                deg = rng.randint(1, 3)
                parts.append([rng.randint(-9, 9) for _ in range(deg)] + [rng.choice([1, 2, -1, 3])])
            prod = [1]
            for part in parts:
                prod = poly_mul_z(prod, part)
            f = IntegerPolynomial(prod)
            if f.is_zero():
                continue
            cont, factors = factor_over_integers(f)
            assert rebuild_z(cont, factors) == f
            for g, _ in factors:
                assert g.leading() > 0
                from puiseux.polyfactor import _z_content

                assert abs(_z_content(list(g.coeffs))) == 1

    def test_big_coefficients(self):
        # beyond 64-bit: (X - 2^70)(X + 2^70 + 1)
        a, b = 1 << 70, (1 << 70) + 1
        f = IntegerPolynomial([-a, 1]) * IntegerPolynomial([b, 1])
        cont, factors = factor_over_integers(f)
        assert rebuild_z(cont, factors) == f
        assert len(factors) == 2


class TestMignotte:
    def test_bound_dominates_factor_coefficients(self):
        rng = random.Random(5)
        for _ in range(40):
            f = [rng.randint(-20, 20) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 5)]
            g = [rng.randint(-20, 20) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 5)]
            prod = poly_mul_z(f, g)
            bound = mignotte_bound(prod)
            lead = prod[-1]
            # lc(fg) * f has coefficients within the bound
            assert all(abs(lead * c) <= bound * abs(f[-1]) for c in f)
            assert all(abs(c) <= bound for c in poly_mul_z([lead], f))


class TestIsIrreduciblePoly:
    def test_examples(self):
        assert is_irreducible_poly(IntegerPolynomial([-1, 1]), QQ)
        assert not is_irreducible_poly(IntegerPolynomial([-1, 0, 1]), QQ)
        assert is_irreducible_poly(IntegerPolynomial([1, 0, 0, 0, 1]), QQ)
        assert not is_irreducible_poly(ModPolynomial(2, [1, 0, 0, 0, 1]), PrimeField(2))

    def test_constant_rejected(self):
        with pytest.raises(DomainError):
            is_irreducible_poly(IntegerPolynomial([3]), QQ)

    def test_screen_consistency(self):
        # engine-reported irreducible factors have no rational roots
        f = IntegerPolynomial([6, -5, 1]) * IntegerPolynomial([1, 1, 1])
        cont, factors = factor_over_integers(f)
        for g, _ in factors:
            if g.degree < 2:
                continue
            c = list(g.coeffs)
            for num in range(-6, 7):
                for den in (1, 2, 3):
                    val = sum(ci * pow(num, i) * pow(den, g.degree - i) for i, ci in enumerate(c))
                    assert val != 0
