from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from puiseux.errors import MonoidValidationError, ParseError
from puiseux.fields import QQ, PrimeField
from puiseux.monoid import (
    BiPrimeDivisible,
    FinitelyGenerated,
    PrimePowerPair,
    PrimePowerReciprocal,
    PrimeReciprocal,
    QNonneg,
)
from puiseux.parsing import (
    format_monoid,
    format_poly,
    format_rational,
    parse_monoid,
    parse_poly,
    parse_rational,
)
from puiseux.poly import canonicalize

F2 = PrimeField(2)


class TestRationals:
    def test_literals(self):
        assert parse_rational("13/6") == Q(13, 6)
        assert parse_rational("7") == Q(7)
        assert parse_rational(" 3/4 ") == Q(3, 4)

    def test_format(self):
        assert format_rational(Q(13, 6)) == "13/6"
        assert format_rational(Q(4)) == "4"

    def test_errors_carry_offsets(self):
        with pytest.raises(ParseError) as info:
            parse_rational("3/")
        assert info.value.offset == 2
        with pytest.raises(ParseError):
            parse_rational("x")
        with pytest.raises(ParseError):
            parse_rational("1/0")

    @given(st.builds(Q, st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=10**4)))
    def test_roundtrip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestMonoidGrammar:
    def test_families(self):
        assert parse_monoid("powers: 2, 3") == PrimePowerPair(2, 3)
        assert parse_monoid("pr: 1/2, 1/3; tail") == PrimeReciprocal([(1, 2), (1, 3)], tail=True)
        assert parse_monoid("pr: 3/2, 5/3") == PrimeReciprocal([(3, 2), (5, 3)])
        assert parse_monoid("fg: 2/3, 3/4, 17/12") == FinitelyGenerated([Q(2, 3), Q(3, 4), Q(17, 12)])
        assert parse_monoid("qplus") == QNonneg()
        assert parse_monoid("ppr: 5") == PrimePowerReciprocal(5)
        assert parse_monoid("biprime: 2, 3") == BiPrimeDivisible(2, 3)

    def test_validation_errors_are_named(self):
        with pytest.raises(MonoidValidationError):
            parse_monoid("ppr: 4")
        with pytest.raises(MonoidValidationError):
            parse_monoid("pr: 1/2, 1/2")
        with pytest.raises(MonoidValidationError):
            parse_monoid("pr: 4/2")
        with pytest.raises(MonoidValidationError):
            parse_monoid("powers: 3, 3")

    def test_syntax_errors(self):
        with pytest.raises(ParseError):
            parse_monoid("fg 1/2")
        with pytest.raises(ParseError):
            parse_monoid("unknown: 1")
        with pytest.raises(ParseError):
            parse_monoid("powers: 2")
        with pytest.raises(ParseError):
            parse_monoid("qplus: 3")

    def test_roundtrip(self):
        for text in (
            "fg: 2/3, 3/4",
            "pr: 1/2, 1/3; tail",
            "pr: 3/2, 5/3",
            "qplus",
            "ppr: 7",
            "biprime: 2, 5",
            "powers: 3, 5",
        ):
            M = parse_monoid(text)
            assert parse_monoid(format_monoid(M)) == M


class TestPolyGrammar:
    def test_canonical_example(self):
        f = parse_poly("X^(3/2) + 2*X^(1/2) + 2", QQ)
        assert f.terms == ((Q(3, 2), Q(1)), (Q(1, 2), Q(2)), (Q(0), Q(2)))

    def test_mod2(self):
        f = parse_poly("X^(1/3) + 1", F2)
        assert len(f.terms) == 2
        assert parse_poly("X + X", F2).is_zero()

    def test_coefficient_forms(self):
        f = parse_poly("3/4*X - 1/2", QQ)
        assert f.terms == ((Q(1), Q(3, 4)), (Q(0), Q(-1, 2)))
        assert parse_poly("-X^2 + 5", QQ).terms == ((Q(2), Q(-1)), (Q(0), Q(5)))

    def test_integer_exponent(self):
        assert parse_poly("X^5", QQ).terms == ((Q(5), Q(1)),)

    def test_mod_p_rational_coefficient(self):
        f = parse_poly("1/2*X", PrimeField(5))
        assert f.terms == ((Q(1), 3),)  # 2^(-1) = 3 mod 5

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("X^(-1/2)", QQ)
        with pytest.raises(ParseError):
            parse_poly("X^-2", QQ)

    def test_syntax_errors_with_offsets(self):
        with pytest.raises(ParseError) as info:
            parse_poly("2X", QQ)
        assert info.value.offset == 1
        with pytest.raises(ParseError):
            parse_poly("X^", QQ)
        with pytest.raises(ParseError):
            parse_poly("X + ", QQ)
        with pytest.raises(ParseError):
            parse_poly("", QQ)

    def test_zero(self):
        assert parse_poly("0", QQ).is_zero()
        assert format_poly(parse_poly("0", QQ)) == "0"

    exponents = st.builds(Q, st.integers(min_value=0, max_value=9), st.integers(min_value=1, max_value=8))

    @given(
        st.lists(
            st.tuples(exponents, st.builds(Q, st.integers(-20, 20), st.integers(1, 6))),
            max_size=5,
        )
    )
    @settings(max_examples=150)
    def test_roundtrip_q(self, raw):
        f = canonicalize(raw, QQ)
        assert parse_poly(format_poly(f), QQ) == f

    @given(
        st.lists(
            st.tuples(exponents, st.integers(min_value=0, max_value=4)),
            max_size=5,
        )
    )
    @settings(max_examples=100)
    def test_roundtrip_f5(self, raw):
        field = PrimeField(5)
        f = canonicalize(raw, field)
        assert parse_poly(format_poly(f), field) == f
