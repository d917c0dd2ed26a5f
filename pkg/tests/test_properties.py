"""Property checks over generated inputs."""
import random
from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from roundsleek import (
    Cmp,
    EuclideanSpace,
    IntervalUnion,
    bounded_transform,
    compare,
    decide_round_interval_union,
    decide_sleek_interval_union,
    gallery_space,
    grid_oracle,
    monotone_transform,
    truncate_transform,
)
from roundsleek.intervals import Interval, random_interval_union

coord = st.fractions(min_value=-8, max_value=8, max_denominator=12)
vec2 = st.tuples(coord, coord)


@st.composite
def unions(draw):
    ends = sorted(set(draw(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=20), min_size=2, max_size=12))))
    assume(len(ends) >= 2)
    comps = []
    for lo, hi in zip(ends[::2], ends[1::2]):
        if draw(st.booleans()) and draw(st.booleans()):
            comps.append(Interval(lo, lo))
        else:
            comps.append(Interval(lo, hi, draw(st.booleans()), draw(st.booleans())))
    X = IntervalUnion(comps)
    assume(X.has_two_points())
    return X


@settings(max_examples=300, deadline=None)
@given(unions())
def test_sleek_implies_round(X):
    assert not decide_sleek_interval_union(X) or decide_round_interval_union(X)


@settings(max_examples=150, deadline=None)
@given(unions())
def test_deciders_match_grid_oracle(X):
    g = grid_oracle(X)
    assert (decide_round_interval_union(X), decide_sleek_interval_union(X)) == (g.round, g.sleek)


@settings(max_examples=200, deadline=None)
@given(unions())
def test_singleton_components_break_both(X):
    if any(iv.is_singleton for iv in X.intervals):
        assert not decide_round_interval_union(X) and not decide_sleek_interval_union(X)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_closed_bounded_unions_are_not_sleek(seed):
    X = random_interval_union(random.Random(seed))
    closed = IntervalUnion([Interval(iv.lo, iv.hi) for iv in X.intervals])
    assert not decide_sleek_interval_union(closed)


SPACES = {
    "plane": EuclideanSpace(2),
    "bounded": bounded_transform(EuclideanSpace(2)),
    "log": monotone_transform(EuclideanSpace(2), "log(1+t)"),
    "min": truncate_transform(EuclideanSpace(2), F(3, 2)),
}


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(SPACES)), vec2, vec2, vec2)
def test_triangle_inequality_and_symmetry(name, x, y, z):
    d = SPACES[name].dist
    assert d(x, x).hi == 0
    assert compare(d(x, y), d(y, x)) is Cmp.EQ
    assert d(x, z).lo <= d(x, y).hi + d(y, z).hi


@settings(max_examples=200, deadline=None)
@given(vec2, vec2, vec2)
def test_bounded_transform_keeps_strict_order(x, y, z):
    plane, bt = SPACES["plane"], SPACES["bounded"]
    before = compare(plane.dist(x, z), plane.dist(x, y))
    if before is not Cmp.UNKNOWN:
        assert compare(bt.dist(x, z), bt.dist(x, y)) is before


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=10), st.integers(min_value=0, max_value=1),
       st.fractions(min_value=-5, max_value=5, max_denominator=10), st.integers(min_value=0, max_value=1),
       st.sampled_from([F(1, 2), F(1), F(3, 2), F(2), F(5, 4)]))
def test_two_lines_oracle_matches_distances(a, b, x, c, r):
    from roundsleek import xprime_ball_oracle

    space = gallery_space("two-lines").space
    order = compare(space.dist((a, F(b)), (x, F(c))), r)
    assert xprime_ball_oracle(a, b, r).contains((x, F(c))) is (order is not Cmp.GT)
