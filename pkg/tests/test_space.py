from fractions import Fraction as F

import pytest

from roundsleek import (
    BoundedReal,
    DiscreteSpace,
    DomainMismatch,
    EuclideanSpace,
    IntervalSpace,
    IntervalUnion,
    ToleranceConfig,
    eval_distance,
    gallery_space,
    truncate_transform,
    verify_metric_axioms,
)
from roundsleek.numbers import sqrt
from roundsleek.points import Label


def test_identical_points_are_at_distance_zero(line):
    assert eval_distance(line, F(0), F(0)) == BoundedReal(0)


def test_two_lines_distance_across_lines():
    space = gallery_space("two-lines").space
    d = eval_distance(space, (F(0), F(0)), (F(1, 2), F(1)))
    assert d.contains(sqrt(F(5, 4)).lo) and d.contains(sqrt(F(5, 4)).hi)
    assert d.lo > 1


def test_discrete_metric():
    space = DiscreteSpace(["u", "v"])
    assert eval_distance(space, Label("u"), Label("v")) == BoundedReal(1)
    assert eval_distance(space, Label("u"), Label("u")) == BoundedReal(0)


def test_domain_mismatch(line):
    with pytest.raises(DomainMismatch):
        eval_distance(line, (F(0), F(0)), F(1))
    with pytest.raises(DomainMismatch):
        eval_distance(DiscreteSpace(["u"]), Label("u"), Label("zz"))


def test_line_metric_is_exact(line):
    assert eval_distance(line, F(-1, 3), F(2, 3)) == BoundedReal(1)


def test_euclidean_distance_uses_exact_squares():
    assert eval_distance(EuclideanSpace(2), (F(0), F(0)), (F(3), F(4))) == BoundedReal(5)


def test_axioms_hold_on_closed_disk():
    report = verify_metric_axioms(gallery_space("closed-disk").space, ToleranceConfig(budget=1000))
    assert report.passed and report.triples == 1000


def test_axioms_hold_for_truncated_line(line):
    assert verify_metric_axioms(truncate_transform(line, 1), ToleranceConfig(budget=1000)).passed


class _Signed(IntervalSpace):
    def dist(self, p, q):
        return BoundedReal(p - q)


def test_corrupted_signed_metric_is_caught():
    report = verify_metric_axioms(_Signed(IntervalUnion.real_line()), ToleranceConfig(budget=200))
    assert not report.passed
    sym = [v for v in report.violations if v.axiom == "symmetry"]
    assert sym
    x, y = sym[0].points
    assert x != y


def test_config_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(budget=0)
    with pytest.raises(ValueError):
        ToleranceConfig(sep_eps=F(0))
    cfg = ToleranceConfig(seed=3, budget=7)
    assert ToleranceConfig.from_json(cfg.to_json()) == cfg


def test_sampling_is_deterministic_and_in_domain():
    space = gallery_space("closed-disk").space
    a = space.sample_global(50, 11)
    assert a == space.sample_global(50, 11)
    assert all(space.contains(p) for p in a)
    near = space.sample_near((F(1), F(0)), F(1, 8), 30, 2)
    assert all(space.contains(p) and space.dist(p, (F(1), F(0))).lo <= F(1, 8) for p in near)


def test_sampled_pairs_stay_below_declared_diameter():
    for name in ("closed-disk", "circle", "product-D"):
        space = gallery_space(name).space
        pts = space.sample_global(30, 0)
        for p in pts:
            for q in pts:
                assert space.dist(p, q).lo <= space.diameter.hi
