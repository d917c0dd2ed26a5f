from fractions import Fraction as F

import pytest

from roundsleek import (
    EuclideanSpace,
    InvalidParameter,
    IntervalSpace,
    IntervalUnion,
    NotLinear,
    ToleranceConfig,
    Verdict,
    WitnessKind,
    bounded_transform,
    check_convexity,
    check_round,
    check_sleek,
    check_strict_ball_convexity,
    check_strict_convexity,
    check_union_sleekness,
    decide_round_interval_union,
    decide_sleek_interval_union,
    gallery_space,
    replay_witness,
    subspace,
    truncate_transform,
)
from roundsleek import regions as R


def U(text):
    return IntervalUnion.parse(text)


@pytest.mark.parametrize("text,expected", [("[0,1]", True), ("[0,1] u [2,3]", False), ("(0,1)", True)])
def test_decide_round(text, expected):
    assert decide_round_interval_union(U(text)) is expected


@pytest.mark.parametrize("text,expected", [("(0,1)", True), ("[0,1]", False), ("(0,1]", False)])
def test_decide_sleek(text, expected):
    assert decide_sleek_interval_union(U(text)) is expected


def test_deciders_need_two_points():
    with pytest.raises(InvalidParameter):
        decide_round_interval_union(U("{1}"))


def test_open_gap_union_is_round_and_sleek():
    X = U("(0,1) u (2,3)")
    assert decide_round_interval_union(X) and decide_sleek_interval_union(X)


def test_two_lines_not_round_with_paper_witness():
    space = gallery_space("two-lines").space
    cfg = ToleranceConfig(seed=7)
    v = check_round(space, cfg)
    assert v.verdict is Verdict.VIOLATED
    x, y = v.witness.points["x"], v.witness.points["y"]
    assert x[0] == y[0] and {x[1], y[1]} == {0, 1}
    assert v.witness.separation.lo == F(1, 2)
    assert v.witness.kind is WitnessKind.MIN_ON_OPEN_SET
    assert replay_witness(space, v.witness, cfg)


def test_two_point_space_not_round():
    assert check_round(gallery_space("two-point").space).verdict is Verdict.VIOLATED


def test_closed_disk_round_at_budget():
    v = check_round(gallery_space("closed-disk").space, ToleranceConfig(budget=500))
    assert v.verdict is Verdict.HOLDS_AT_BUDGET and v.effort.pairs > 0


def test_quadrant_not_sleek_at_the_corner():
    space = gallery_space("quadrant").space
    v = check_sleek(space)
    assert v.verdict is Verdict.VIOLATED
    assert v.witness.kind is WitnessKind.MAX_ON_OPEN_SET
    assert v.witness.points == {"x": (F(1), F(-1)), "y": (F(0), F(0))}
    assert v.witness.value.lo ** 2 <= 2 <= v.witness.value.hi ** 2
    assert replay_witness(space, v.witness)


def test_two_lines_sleek_at_budget():
    assert check_sleek(gallery_space("two-lines").space, ToleranceConfig(budget=500)).verdict is Verdict.HOLDS_AT_BUDGET


def test_opposite_arcs_not_sleek():
    v = check_sleek(gallery_space("arcs-Z").space)
    assert v.verdict is Verdict.VIOLATED


def test_exact_domains_give_exact_verdicts():
    v = check_sleek(gallery_space("open-interval").space)
    assert v.verdict is Verdict.HOLDS_EXACT
    v = check_round(gallery_space("gap-union").space)
    assert v.verdict is Verdict.VIOLATED and replay_witness(gallery_space("gap-union").space, v.witness)


def test_single_point_is_vacuous():
    v = check_round(IntervalSpace(U("{2}")))
    assert v.verdict is Verdict.HOLDS_EXACT and "reason" in v.details


def test_midpoint_convexity_of_space():
    assert check_convexity(EuclideanSpace(3), "lambda:1/2").verdict is Verdict.HOLDS_AT_BUDGET


def test_gap_union_is_not_metrically_convex():
    X = IntervalSpace(U("[0,1] u [2,3]"))
    v = check_convexity(X, "metric", pairs=[(F(1), F(2))])
    assert v.verdict is Verdict.VIOLATED and v.details["certified"]
    assert replay_witness(X, v.witness)


def test_line_is_strongly_externally_convex(line):
    v = check_convexity(line, "strong-external:2", pairs=[(F(0), F(1))])
    assert v.verdict is Verdict.HOLDS_AT_BUDGET and v.details["last_z"] == 2


@pytest.mark.parametrize("kind", ["lambda:0", "lambda:1", "lambda", "strong-external:0", "bogus"])
def test_invalid_convexity_parameters(kind, line):
    with pytest.raises(InvalidParameter):
        check_convexity(line, kind)


def test_strong_external_needs_s_beyond_the_pair(line):
    with pytest.raises(InvalidParameter):
        check_convexity(line, "strong-external:1", pairs=[(F(0), F(3))])


def test_strict_convexity(line):
    assert check_strict_convexity(EuclideanSpace(2)).verdict is Verdict.HOLDS_AT_BUDGET
    plateau = truncate_transform(line, 1)
    v = check_strict_convexity(plateau)
    assert v.verdict is Verdict.VIOLATED and replay_witness(plateau, v.witness)
    assert check_strict_convexity(bounded_transform(EuclideanSpace(2))).verdict is Verdict.HOLDS_AT_BUDGET


def test_strict_convexity_needs_linear_structure():
    with pytest.raises(NotLinear):
        check_strict_convexity(gallery_space("circle").space)


def test_strict_ball_convexity(line):
    assert check_strict_ball_convexity(EuclideanSpace(2), 1).verdict is Verdict.HOLDS_AT_BUDGET
    v = check_strict_ball_convexity(line, 1, pairs=[(F(1), F(-1))], lambdas=[F(1, 2)])
    assert v.verdict is Verdict.HOLDS_AT_BUDGET
    with pytest.raises(InvalidParameter):
        check_strict_ball_convexity(line, 1, pairs=[(F(1), F(1))])


def test_strict_ball_convexity_on_truncated_line(line):
    # B[0,1] is the whole line under min(d, 1): every combination is interior
    v = check_strict_ball_convexity(truncate_transform(line, 1), 1)
    assert v.verdict is Verdict.HOLDS_AT_BUDGET


def test_union_sleekness_of_label_slices(line):
    from roundsleek import DiscreteSpace, euclidean_product

    plane = euclidean_product([DiscreteSpace(["u", "v", "w"]), line])
    slices = [R.ProductRegion([R.LabelSet([n]), IntervalUnion.real_line()]) for n in "uvw"]
    v = check_union_sleekness(slices, plane, ToleranceConfig(budget=60))
    assert v.holds and not v.details["contradiction"]
    assert all(p.holds for p in v.details["pairwise"].values())


def test_union_sleekness_of_opposite_arcs():
    X1 = R.CircleArc((0, 0), 1, (1, -1), (1, 1), closed=False)
    X2 = R.CircleArc((0, 0), 1, (-1, 1), (-1, -1), closed=False)
    v = check_union_sleekness([X1, X2], EuclideanSpace(2), ToleranceConfig(budget=60))
    assert v.verdict is Verdict.VIOLATED
    assert v.details["pairwise"][(0, 1)] is Verdict.VIOLATED
    assert not v.details["contradiction"]


def test_union_of_one_region_is_check_sleek():
    X = U("(0,1)")
    line = IntervalSpace(IntervalUnion.real_line())
    assert check_union_sleekness([X], line).verdict is check_sleek(subspace(line, X)).verdict
