import decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roundsleek.numbers import (
    BoundedReal,
    Cmp,
    compare,
    format_rational,
    log1p,
    minimum,
    over_one_plus,
    parse_rational,
    sqrt,
    square_of,
)

rationals = st.fractions(min_value=0, max_value=1000, max_denominator=1000)


def test_bounds_are_ordered():
    with pytest.raises(ValueError):
        BoundedReal(2, 1)


def test_exact_values_have_zero_width():
    x = BoundedReal(Fraction(3, 7))
    assert x.is_exact and x.width == 0 and x.value == Fraction(3, 7)


def test_parse_and_format_round_trip():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("5") == 5
    assert format_rational(Fraction(6, 8)) == "3/4"
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_sqrt_of_perfect_square_is_exact():
    assert sqrt(Fraction(9, 4)) == BoundedReal(Fraction(3, 2))


def test_square_of_sqrt_is_exact():
    assert square_of(sqrt(2)) == BoundedReal(2)


def test_three_valued_comparison():
    assert compare(BoundedReal(1), BoundedReal(2)) is Cmp.LT
    assert compare(sqrt(2), Fraction(141421, 100000)) is Cmp.GT
    assert compare(sqrt(2), sqrt(2)) is Cmp.EQ
    # two different enclosures of an irrational that never separate
    assert compare(BoundedReal(0, 1), BoundedReal(0, 1)) is Cmp.UNKNOWN


def test_minimum_picks_the_smaller_exact_value():
    assert minimum(BoundedReal(5), BoundedReal(1)) == BoundedReal(1)


def test_over_one_plus_at_one_is_half():
    assert over_one_plus(1) == BoundedReal(Fraction(1, 2))


@settings(max_examples=200, deadline=None)
@given(rationals)
def test_sqrt_encloses_mpmath_value(t):
    mpmath.mp.dps = 50
    enc = sqrt(t)
    true = mpmath.sqrt(mpmath.mpf(t.numerator) / t.denominator)
    assert mpmath.mpf(enc.lo.numerator) / enc.lo.denominator <= true <= mpmath.mpf(enc.hi.numerator) / enc.hi.denominator


@settings(max_examples=200, deadline=None)
@given(rationals)
def test_log1p_encloses_decimal_value(t):
    # decimal's ln is independent of the mpmath interval code behind log1p
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        true = (1 + decimal.Decimal(t.numerator) / t.denominator).ln()
        ulp = decimal.Decimal(10) ** (true.adjusted() - 58)
        enc = log1p(t)
        assert decimal.Decimal(enc.lo.numerator) / enc.lo.denominator <= true + ulp
        assert true - ulp <= decimal.Decimal(enc.hi.numerator) / enc.hi.denominator
        assert enc.width < Fraction(1, 10**15)


@settings(max_examples=100, deadline=None)
@given(rationals, st.integers(min_value=0, max_value=6))
def test_refinement_never_loosens(t, level):
    enc = sqrt(t)
    finer = enc.refined(level)
    assert enc.lo <= finer.lo and finer.hi <= enc.hi
    assert finer.width <= enc.width
