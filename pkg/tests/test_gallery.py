from fractions import Fraction as F

import pytest

from roundsleek import (
    BoundedReal,
    DomainMismatch,
    UnknownName,
    gallery_space,
    productD_ball_oracle,
    xprime_ball_oracle,
)
from roundsleek.gallery import NAMES, Expect, product_d_space
from roundsleek.numbers import sqrt

REQUIRED = {
    "open-interval", "closed-interval", "gap-union", "rationals-sample", "circle", "segment", "two-point",
    "arc-X1", "arc-X2", "arcs-Z", "halfplane-Y1", "halfplane-Y2", "quadrant", "two-lines", "product-D",
    "dictionary-plane", "closed-disk", "R1", "R2", "R3",
}


def test_registry_covers_required_entries():
    assert REQUIRED <= set(NAMES)


def test_at_least_twelve_entries_carry_known_verdicts():
    entries = [gallery_space(n) for n in NAMES]
    known = [e for e in entries if Expect.UNVERIFIED not in (e.expected_round, e.expected_sleek)]
    assert len(known) >= 12


def test_named_expectations():
    tl = gallery_space("two-lines")
    assert (tl.expected_round, tl.expected_sleek) == (Expect.FALSE, Expect.TRUE)
    assert gallery_space("quadrant").expected_sleek is Expect.FALSE
    assert gallery_space("product-D").expected_sleek is Expect.TRUE
    assert gallery_space("rationals-sample").expected_round is Expect.UNVERIFIED


def test_unknown_name():
    with pytest.raises(UnknownName):
        gallery_space("no-such-space")


def test_entries_carry_provenance_and_definition():
    for name in NAMES:
        entry = gallery_space(name)
        assert entry.provenance
        assert entry.space.definition == {"type": "gallery", "name": name}


def test_xprime_small_radius():
    ball = xprime_ball_oracle(0, 0, F(1, 2))
    assert ball.case == "r<1"
    assert ball.segments() == [(F(0), BoundedReal(F(1, 2)))]
    assert ball.isolated_points() == []


def test_xprime_radius_one_adds_the_touching_point():
    ball = xprime_ball_oracle(0, 0, 1)
    assert ball.case == "r=1"
    assert ball.isolated_points() == [(F(0), F(1))]
    assert ball.contains((F(0), F(1))) and not ball.membership((F(0), F(1)), closed=False)


def test_xprime_large_radius_has_sqrt3_half_width():
    ball = xprime_ball_oracle(0, 0, 2)
    (b0, w0), (b1, w1) = ball.segments()
    assert (b0, w0) == (F(0), BoundedReal(2)) and b1 == 1
    root3 = sqrt(3)
    assert w1.lo <= root3.lo and root3.hi <= w1.hi
    assert ball.contains((F(17, 10), F(1))) and not ball.contains((F(7, 4), F(1)))


def test_xprime_rejects_bad_line():
    with pytest.raises(DomainMismatch):
        xprime_ball_oracle(0, F(1, 2), 1)


def test_series_product_ball_cases():
    space = product_d_space()
    a = space.point(F(0))
    small = productD_ball_oracle(space, a, F(1, 4))
    assert small.case == "r<1/2" and small.a_sets() == [(BoundedReal(F(1, 4)), F(0))]
    half = productD_ball_oracle(space, a, F(1, 2))
    assert half.case == "r=1/2" and half.a_sets()[1] == (BoundedReal(0), F(1))
    assert half.contains(space.point(F(1))) and not half.contains(space.point(F(1), F(1, 100)))
    whole = productD_ball_oracle(space, a, 1)
    for p in space.sample_global(50, 3):
        assert whole.contains(p)


def test_series_product_ball_rejects_foreign_points():
    with pytest.raises(DomainMismatch):
        productD_ball_oracle(product_d_space(), (F(0), F(0)), 1)
