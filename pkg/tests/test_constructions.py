import decimal
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roundsleek import (
    BoundedReal,
    Cmp,
    DiscreteSpace,
    EmptyRegion,
    EuclideanSpace,
    InvalidParameter,
    IntervalSpace,
    IntervalUnion,
    MissingDiameter,
    ToleranceConfig,
    UnknownTransform,
    bounded_transform,
    compare,
    euclidean_product,
    monotone_transform,
    product_metric_D,
    subspace,
    truncate_transform,
    verify_metric_axioms,
)
from roundsleek import regions as R
from roundsleek.constructions import ProductWeights
from roundsleek.gallery import product_d_space
from roundsleek.points import Label, Pair


def test_circle_subspace_uses_chordal_metric():
    s1 = subspace(EuclideanSpace(2), R.Circle())
    assert s1.contains((F(0), F(1))) and not s1.contains((F(1), F(1)))
    assert s1.dist((F(1), F(0)), (F(-1), F(0))) == BoundedReal(2)


def test_full_restriction_is_identity(line):
    assert subspace(line, R.FullSpace(1)) is line


def test_circle_meets_segment_in_two_points():
    two = subspace(EuclideanSpace(2), R.IntersectionRegion([R.Circle(), R.Segment((-1, 0), (1, 0))]))
    assert two.contains((F(-1), F(0))) and two.contains((F(1), F(0)))
    assert not two.contains((F(0), F(0)))
    assert all(p in ((F(-1), F(0)), (F(1), F(0))) for p in two.sample_global(20, 0))


def test_empty_region_is_rejected():
    far = R.IntersectionRegion([R.Disk((0, 0), 1, closed=False), R.Disk((5, 0), 1, closed=False)])
    with pytest.raises(EmptyRegion):
        subspace(EuclideanSpace(2), far)


def test_product_of_two_lines_is_the_plane(line):
    plane = euclidean_product([line, line])
    assert isinstance(plane, EuclideanSpace) and plane.dim == 2
    assert plane.dist((F(0), F(0)), (F(3), F(4))) == BoundedReal(5)


def test_single_factor_product_is_the_factor(line):
    assert euclidean_product([line]) is line


def test_dictionary_plane(line):
    plane = euclidean_product([DiscreteSpace(["u", "v"]), line])
    p, q = Pair(Label("u"), F(0)), Pair(Label("v"), F(0))
    assert plane.dist(p, q) == BoundedReal(1)
    assert plane.dist(p, Pair(Label("u"), F(3, 4))) == BoundedReal(F(3, 4))


def test_series_metric_examples():
    space = product_d_space()
    a = space.point(F(0), F(0))
    for eps in (F(1, 3), F(1), F(5, 2)):
        z = space.point(F(1), eps)
        assert space.dist(a, z).contains(F(1, 2) + eps / (4 * (1 + eps)))
    assert space.dist(a, a).lo == 0 and space.dist(a, a).hi <= F(1, 2**32)
    assert space.dist(a, space.point(F(1), F(0))).contains(F(1, 2))


def test_series_metric_needs_finite_tail_diameter(line):
    with pytest.raises(MissingDiameter):
        product_metric_D([line], tail=line)


def test_weights_follow_diameters(line):
    finite = IntervalSpace(IntervalUnion.parse("[0,3]"))
    space = product_metric_D([line, finite], tail=bounded_transform(line))
    assert space.weights.lambdas == (BoundedReal(1), BoundedReal(3))
    bad = ProductWeights((BoundedReal(1), BoundedReal(1)), BoundedReal(1), 32)
    with pytest.raises(InvalidParameter):
        product_metric_D([line, finite], weights=bad, tail=bounded_transform(line))


def test_bounded_transform_values(line):
    bt = bounded_transform(line)
    assert bt.dist(F(0), F(1)) == BoundedReal(F(1, 2))
    assert bt.dist(F(0), F(0)) == BoundedReal(0)
    assert bt.diameter.hi <= 1


def test_truncate_transform_values(line):
    tt = truncate_transform(line, 1)
    assert tt.dist(F(0), F(5)) == BoundedReal(1)
    assert tt.dist(F(0), F(0)) == BoundedReal(0)
    assert tt.dist(F(0), F(1, 2)) == BoundedReal(F(1, 2))
    with pytest.raises(InvalidParameter):
        truncate_transform(line, 0)
    with pytest.raises(InvalidParameter):
        truncate_transform(line, 1, pair=(F(0), F(1, 2)))


def test_monotone_registry(line):
    log = monotone_transform(line, "log(1+t)")
    assert log.dist(F(0), F(0)) == BoundedReal(0)
    d = log.dist(F(0), F(1))
    with decimal.localcontext() as ctx:
        ctx.prec = 40
        ln2 = decimal.Decimal(2).ln()
        assert decimal.Decimal(d.lo.numerator) / d.lo.denominator <= ln2 <= decimal.Decimal(d.hi.numerator) / d.hi.denominator
    with pytest.raises(UnknownTransform):
        monotone_transform(line, "sin")
    for name in ("log(1+t)", "t/(1+t)"):
        assert verify_metric_axioms(monotone_transform(EuclideanSpace(2), name), ToleranceConfig(budget=300)).passed


def test_bounded_transform_preserves_order_on_plane():
    plane = EuclideanSpace(2)
    bt = bounded_transform(plane)
    rng = random.Random(1)
    pts = plane.sample_global(60, 1)
    for _ in range(300):
        x, y, z = rng.sample(pts, 3)
        before = compare(plane.dist(x, z), plane.dist(x, y))
        if before is Cmp.LT:
            assert compare(bt.dist(x, z), bt.dist(x, y)) is Cmp.LT


small = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@settings(max_examples=150, deadline=None)
@given(small, small, small)
def test_series_metric_triangle_inequality(a, b, c):
    space = product_d_space()
    x, y, z = space.point(F(0), a), space.point(F(1), b, a), space.point(F(0), c, b)
    assert space.dist(x, z).lo <= space.dist(x, y).hi + space.dist(y, z).hi
