import math
from fractions import Fraction as F

import pytest

from roundsleek import (
    BallKind,
    BallQuery,
    DomainMismatch,
    EuclideanSpace,
    IntervalSpace,
    IntervalUnion,
    InvalidQuery,
    ToleranceConfig,
    ball_member,
    closure_contains,
    exterior_limit_point,
    gallery_space,
)
from roundsleek.numbers import Cmp, compare
from roundsleek.topology import Answer


def _xprime():
    return gallery_space("two-lines").space


def test_ball_member_on_two_lines_at_radius_one():
    space = _xprime()
    y = (F(0), F(1))
    assert ball_member(space, BallQuery((F(0), F(0)), 1, BallKind.CLOSED), y).yes
    assert ball_member(space, BallQuery((F(0), F(0)), 1, BallKind.OPEN), y).no


def test_center_is_in_both_balls():
    space = _xprime()
    c = (F(3), F(0))
    for kind in BallKind:
        assert ball_member(space, BallQuery(c, F(1, 10), kind), c).yes


@pytest.mark.parametrize("y1", [F(17, 10), F(173, 100), F(-1732, 1000)])
def test_ball_member_below_sqrt3(y1):
    assert y1 * y1 < 3
    assert ball_member(_xprime(), BallQuery((F(0), F(0)), 2, BallKind.CLOSED), (y1, F(1))).yes


def test_ball_member_checks_domain():
    with pytest.raises(DomainMismatch):
        ball_member(_xprime(), BallQuery((F(0), F(0)), 1), (F(0), F(1, 2)))


def test_radius_must_be_positive():
    with pytest.raises(InvalidQuery):
        BallQuery((F(0), F(0)), 0)


def test_closure_misses_the_far_end_of_a_gap():
    X = IntervalSpace(IntervalUnion.parse("[0,1] u [2,3]"))
    ans = closure_contains(X, BallQuery(F(1), 1), F(2))
    assert ans.no and ans.separation == F(1, 2)


def test_closure_reaches_the_rim_of_the_disk():
    disk = gallery_space("closed-disk").space
    cfg = ToleranceConfig()
    ans = closure_contains(disk, BallQuery((F(0), F(0)), 1), (F(1), F(0)), cfg)
    assert ans.yes
    seq = ans.sequence
    assert 1 <= len(seq) <= math.ceil(math.log2(1 / cfg.grid_delta))
    for a, b in zip(seq, seq[1:]):
        assert compare(b.to_target, a.to_target) is Cmp.LT
    # each recorded step replays
    for step in seq:
        assert disk.contains(step.point)
        assert compare(disk.dist((F(0), F(0)), step.point), 1) is Cmp.LT
        assert disk.dist(step.point, (F(1), F(0))) == step.to_target


def test_closure_misses_the_other_line():
    for a, b in ((F(0), F(0)), (F(5, 2), F(1))):
        ans = closure_contains(_xprime(), BallQuery((a, b), 1), (a, 1 - b))
        assert ans.no and ans.separation == F(1, 2)


def test_open_ball_points_are_in_the_closure():
    space = EuclideanSpace(2)
    q = BallQuery((F(0), F(0)), 1)
    y = (F(1, 3), F(1, 3))
    assert ball_member(space, q, y).yes and closure_contains(space, q, y).yes


def test_quadrant_corner_is_interior():
    ans = exterior_limit_point(gallery_space("quadrant").space, (F(1), F(-1)), (F(0), F(0)))
    assert ans.no and ans.separation > ToleranceConfig().sep_eps


def test_line_sphere_point_is_an_exterior_limit(line):
    ans = exterior_limit_point(line, F(0), F(1))
    assert ans.yes
    assert all(z.point > 1 for z in ans.sequence)


def test_series_product_flipped_point_is_an_exterior_limit():
    space = gallery_space("product-D").space
    a = space.point(F(0), F(1, 2), F(-1, 3))
    y = space.point(F(1), F(1, 2), F(-1, 3))
    ans = exterior_limit_point(space, a, y)
    assert ans.yes
    r = space.dist(a, y)
    for step in ans.sequence:
        assert compare(step.to_center, r) is Cmp.GT
        assert space.coord(step.point, 0) == 1


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_normed_spaces_have_both_properties(dim, line):
    space = line if dim == 1 else EuclideanSpace(dim)
    cfg = ToleranceConfig(seed=dim)
    pts = space.sample_global(12, dim)
    for x, y in zip(pts, pts[1:]):
        if x == y:
            continue
        r = space.dist(x, y)
        assert closure_contains(space, BallQuery(x, r), y, cfg, distance=r).yes
        assert exterior_limit_point(space, x, y, cfg).verdict is Answer.YES


def test_uncertain_sphere_radius_is_rejected():
    cfg = ToleranceConfig(sep_eps=F(1, 2**200), precision_cap=0)
    with pytest.raises(InvalidQuery):
        exterior_limit_point(EuclideanSpace(2), (F(0), F(0)), (F(1), F(1)), cfg)
