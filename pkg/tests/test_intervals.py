from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roundsleek.intervals import Interval, IntervalUnion, random_interval_union


def U(text):
    return IntervalUnion.parse(text)


def test_normal_form_merges_touching_pieces():
    assert U("[0,1] u (1,2)") == U("[0,2)")
    assert U("[0,1) u (1,2]") != U("[0,2]")  # the gap at 1 survives
    assert str(U("{3} u [0,1)")) == "[0, 1) u {3}"


def test_membership_respects_endpoint_flags():
    X = U("(0,1] u {2}")
    assert not X.contains(F(0))
    assert X.contains(F(1)) and X.contains(F(2))
    assert not X.contains(F(3, 2))


def test_two_point_detection():
    assert not U("{1}").has_two_points()
    assert U("{1} u {2}").has_two_points()
    assert U("(0,1)").has_two_points()


def test_isolation_radius_of_singleton():
    X = U("[0,1] u {3} u (4,5)")
    assert X.isolation_radius(F(3)) == 1
    assert X.isolation_radius(F(1, 2)) is None


def test_open_and_closed_balls():
    X = U("[0,1] u [2,3]")
    assert X.open_ball(F(1), F(1)) == U("(0,1]")
    assert X.closed_ball(F(1), F(1)) == U("[0,1] u {2}")


def test_empty_interval_rejected_by_normal_form():
    assert Interval(F(1), F(1), False, True).is_empty
    assert len(IntervalUnion([Interval(F(1), F(1), False, False)])) == 0


def test_unbounded_pieces():
    X = U("(-inf,0] u (1,inf)")
    assert not X.is_bounded
    assert X.contains(F(-100)) and X.contains(F(100))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_random_unions_are_in_normal_form(seed):
    import random

    X = random_interval_union(random.Random(seed))
    assert X.has_two_points()
    assert 1 <= len(X) <= 6
    comps = X.intervals
    for a, b in zip(comps, comps[1:]):
        assert a.hi < b.lo or (a.hi == b.lo and not a.hi_closed and not b.lo_closed)
    for e in X.endpoints():
        assert e.denominator <= 20 and 0 <= e <= 5
    assert IntervalUnion(comps) == X


@pytest.mark.parametrize("text", ["(0,1)", "[0,1] u [2,3]", "{0} u (1,2]", "(-inf,0) u [1,inf)"])
def test_parse_str_round_trip(text):
    X = U(text)
    assert U(str(X).replace(" ", "")) == X
