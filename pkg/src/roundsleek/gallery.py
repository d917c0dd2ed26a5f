"""Named example spaces with their known verdicts and two exact ball oracles."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import points as P
from . import regions as R
from .constructions import ProductDSpace, bounded_transform, euclidean_product, subspace
from .errors import DomainMismatch, InvalidParameter, UnknownName
from .intervals import IntervalUnion
from .numbers import BoundedReal, Cmp, compare, lift, sqrt, square_of
from .space import DiscreteSpace, EuclideanSpace, IntervalSpace, MetricSpace, rng_for


class Expect(enum.Enum):
    TRUE = True
    FALSE = False
    UNVERIFIED = None


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    space: MetricSpace
    expected_round: Expect
    expected_sleek: Expect
    provenance: str


# helpers on exact squares

def _square_bounds(r: BoundedReal) -> Tuple[Fraction, Fraction]:
    """Rational bounds on ``r^2`` (exact when the square is known)."""
    s = square_of(lift(r))
    return s.lo, s.hi


# the two horizontal lines R x {0, 1}

@dataclass(frozen=True)
class XPrimeBall:
    """Closed ball of the two-lines space.

    ``C`` is ``|x - a| <= r`` on the centre's line; the other line carries
    nothing (``r < 1``), the single point ``a`` (``r = 1``) or the segment
    ``|x - a| <= sqrt(r^2 - 1)`` (``r > 1``).
    """

    a: Fraction
    b: Fraction
    r: BoundedReal
    case: str  # "r<1", "r=1", "r>1"

    @property
    def half_width(self) -> Optional[BoundedReal]:
        if self.case != "r>1":
            return None
        lo, hi = _square_bounds(self.r)
        return sqrt(lo - 1) if lo == hi else BoundedReal(sqrt(lo - 1).lo, sqrt(hi - 1).hi)

    def segments(self) -> List[Tuple[Fraction, BoundedReal]]:
        """``(line, half-width)`` pairs; a zero half-width is the isolated point."""
        out = [(self.b, self.r)]
        if self.case == "r=1":
            out.append((1 - self.b, BoundedReal(0)))
        elif self.case == "r>1":
            out.append((1 - self.b, self.half_width))
        return out

    def isolated_points(self) -> list:
        """Points of the ball with no other ball point nearby (the touching point when ``r = 1``)."""
        return [(self.a, 1 - self.b)] if self.case == "r=1" else []

    def _offset_sq(self, p) -> Tuple[Fraction, Fraction]:
        dx = p[0] - self.a
        return dx * dx, (0 if p[1] == self.b else 1)

    def membership(self, p, closed: bool = True) -> Optional[bool]:
        """Exact for rational ``r^2``; ``None`` when the bounds on ``r^2`` straddle."""
        if not (isinstance(p, tuple) and len(p) == 2 and p[1] in (0, 1)):
            raise DomainMismatch("points of the two-lines space are (x, 0) or (x, 1)")
        dx2, dy2 = self._offset_sq(p)
        lo, hi = _square_bounds(self.r)
        d2 = dx2 + dy2
        if (d2 <= lo) if closed else (d2 < lo):
            return True
        if (d2 > hi) if closed else (d2 >= hi):
            return False
        return None

    def contains(self, p) -> Optional[bool]:
        return self.membership(p, True)

    def certify_not_in_closure(self, y, eps: Fraction) -> bool:
        # for eps <= 1 the eps-ball of y stays on y's line: (y0 - eps, y0 + eps)
        if eps > 1:
            return False
        lo, hi = _square_bounds(self.r)
        gap = abs(y[0] - self.a) - eps
        if gap < 0:
            return False
        dy2 = 0 if y[1] == self.b else 1
        return gap * gap + dy2 >= hi

    def certify_interior(self, y, eps: Fraction) -> bool:
        if eps > 1:
            return False
        lo, _ = _square_bounds(self.r)
        reach = abs(y[0] - self.a) + eps
        dy2 = 0 if y[1] == self.b else 1
        # the closed eps-box on y's line must sit inside the closed section
        return reach * reach + dy2 <= lo


def xprime_ball_oracle(a, b, r) -> XPrimeBall:
    a, b, r = Fraction(a), Fraction(b), lift(r)
    if b not in (0, 1):
        raise DomainMismatch("the second coordinate is 0 or 1")
    if r.hi <= 0:
        raise InvalidParameter("radius must be positive")
    order = compare(r, 1)
    if order is Cmp.UNKNOWN:
        raise InvalidParameter("cannot place the radius relative to 1")
    case = {Cmp.LT: "r<1", Cmp.EQ: "r=1", Cmp.GT: "r>1"}[order]
    return XPrimeBall(a, b, r, case)


# {0, 1} x R^N with the weighted series metric

def _tail_sum(space: ProductDSpace, a: P.Seq, p: P.Seq) -> BoundedReal:
    """``sum_{n >= 2} d_n(a_n, p_n) 2^-n`` through the product's own term evaluation."""
    zero_a = P.Seq((space.base_coord(0),) + tuple(a.prefix[1:]))
    zero_p = P.Seq((space.base_coord(0),) + tuple(p.prefix[1:]))
    return space.dist(space.canonical(zero_a), space.canonical(zero_p))


@dataclass(frozen=True)
class ProductDBall:
    """Closed ball ``B[a, r]`` as A-sets.

    ``A(s, c)`` holds the points with first coordinate ``c`` whose tail sum
    to ``a`` is at most ``s``.  The ball is ``A(r, a1)`` for ``r < 1/2``,
    adds the flipped point at ``r = 1/2`` and adds ``A(r - 1/2, 1 - a1)``
    beyond.
    """

    space: ProductDSpace
    a: P.Seq
    r: BoundedReal
    case: str  # "r<1/2", "r=1/2", "r>1/2"

    @property
    def a1(self):
        return self.space.coord(self.a, 0)

    def a_sets(self) -> List[Tuple[BoundedReal, Fraction]]:
        out = [(self.r, self.a1)]
        if self.case == "r=1/2":
            out.append((BoundedReal(0), 1 - self.a1))
        elif self.case == "r>1/2":
            out.append((self.r - Fraction(1, 2), 1 - self.a1))
        return out

    def membership(self, p: P.Seq, closed: bool = True, cap: int = 8) -> Optional[bool]:
        if not self.space.contains(p):
            raise DomainMismatch("not a point of the product")
        t = _tail_sum(self.space, self.a, p)
        if self.space.coord(p, 0) == self.a1:
            bound = self.r
        else:
            if self.case == "r<1/2":
                return False
            bound = self.r - Fraction(1, 2)
        order = compare(t, bound, cap)
        if order is Cmp.UNKNOWN:
            return None
        return order is Cmp.LT or (closed and order is Cmp.EQ)

    def contains(self, p: P.Seq) -> Optional[bool]:
        return self.membership(p, True)

    def certify_not_in_closure(self, y: P.Seq, eps: Fraction) -> bool:
        # points within 1/2 of y share its first coordinate; for r <= 1/2 the open ball has none
        return self.space.coord(y, 0) != self.a1 and self.case != "r>1/2" and eps <= Fraction(1, 2)

    def certify_interior(self, y: P.Seq, eps: Fraction) -> bool:
        return compare(self.r, 1) in (Cmp.GT, Cmp.EQ)


def productD_ball_oracle(space: ProductDSpace, a: P.Seq, r) -> ProductDBall:
    r = lift(r)
    if not space.contains(a):
        raise DomainMismatch("centre is not a point of the product")
    if r.hi <= 0:
        raise InvalidParameter("radius must be positive")
    order = compare(r, Fraction(1, 2))
    if order is Cmp.UNKNOWN:
        raise InvalidParameter("cannot place the radius relative to 1/2")
    case = {Cmp.LT: "r<1/2", Cmp.EQ: "r=1/2", Cmp.GT: "r>1/2"}[order]
    return ProductDBall(space, space.canonical(a), r, case)


# registry

def _v(x, y) -> tuple:
    return P.vec(x, y)


def _line(text: str, name: str) -> IntervalSpace:
    return IntervalSpace(IntervalUnion.parse(text), name)


class RationalSample(MetricSpace):
    """Rationals of ``[0, 1]`` with the line metric, sampled with bounded denominators."""

    name = "Q n [0,1]"
    max_den = 64

    def __init__(self):
        self.diameter = BoundedReal(1)

    def contains(self, p) -> bool:
        return isinstance(p, Fraction) and 0 <= p <= 1

    def dist(self, p, q) -> BoundedReal:
        return BoundedReal(abs(p - q))

    def candidates_global(self, count, rng):
        out = []
        for _ in range(count):
            den = rng.randint(1, self.max_den)
            out.append(Fraction(rng.randint(0, den), den))
        return out

    def candidates_near(self, p, radius, count, rng):
        return [p + radius * Fraction(rng.randint(-63, 63), 64) for _ in range(count)]

    def special_points(self):
        return [Fraction(0), Fraction(1), Fraction(1, 2)]

    def toward(self, y, x, step):
        return None if x == y else y + (min(step, abs(x - y) / 2) if x > y else -min(step, abs(x - y) / 2))

    def away(self, y, x, step):
        z = y + (step if y >= x else -step)
        return z if self.contains(z) else None


def _two_lines() -> MetricSpace:
    region = R.ProductRegion([IntervalUnion.real_line(), IntervalUnion.points([0, 1])])
    space = subspace(EuclideanSpace(2), region, "two lines R x {0,1}")
    space.ball_oracle = lambda c, r: xprime_ball_oracle(c[0], c[1], r)
    space.preferred_pairs = [(_v(0, 0), _v(0, 1))]
    return space


def product_d_space() -> ProductDSpace:
    """``{0, 1} x R x R x ...`` with ``|s - t| / (1 + |s - t|)`` on the real factors."""
    first = IntervalSpace(IntervalUnion.points([0, 1]), "{0,1}")
    tail = bounded_transform(IntervalSpace(IntervalUnion.real_line()))
    space = ProductDSpace([first], tail, base=[Fraction(0)], tail_base=Fraction(0), truncation_K=32)
    space.name = "{0,1} x R^N"
    space.ball_oracle = lambda c, r: productD_ball_oracle(space, c, r)
    a = space.point(Fraction(0), Fraction(1, 2), Fraction(-1, 3))
    flipped = space.point(Fraction(1), Fraction(1, 2), Fraction(-1, 3))
    space.preferred_pairs = [(a, flipped), (a, space.point(Fraction(0), Fraction(3, 2), Fraction(-1, 3)))]
    return space


def _arc(start, end) -> R.CircleArc:
    return R.CircleArc((0, 0), 1, start, end, closed=False)


def _sub(region, name: str, pairs=()) -> MetricSpace:
    space = subspace(EuclideanSpace(2), region, name)
    if pairs:
        space.preferred_pairs = list(pairs)
    return space


Y1 = R.HalfPlane((0, 1), 0)  # R x (-inf, 0]
Y2 = R.HalfPlane((-1, 0), 0)  # [0, inf) x R
X1 = _arc((1, -1), (1, 1))
X2 = _arc((-1, 1), (-1, -1))

T, F, U = Expect.TRUE, Expect.FALSE, Expect.UNVERIFIED
COMPACT = "compact with at least two points, hence not sleek"
NORMED = "normed linear space: round and sleek"

_BUILDERS: Dict[str, Tuple[Callable[[], MetricSpace], Expect, Expect, str]] = {
    "open-interval": (lambda: _line("(0,1)", "(0,1)"), T, T, "line metric on (0,1): round and sleek"),
    "closed-interval": (lambda: _line("[0,1]", "[0,1]"), T, F, "line metric on [0,1]: round, not sleek"),
    "half-open-interval": (lambda: _line("(0,1]", "(0,1]"), U, F, "line metric on (0,1]: not sleek"),
    "gap-union": (lambda: _line("[0,1] u [2,3]", "[0,1]u[2,3]"), F, F,
                  "two compact pieces: no equivalent metric is round; compact, so not sleek"),
    "rationals-sample": (RationalSample, U, U, "dense countable set; only sampled, never decided"),
    "R1": (lambda: IntervalSpace(IntervalUnion.real_line(), "R"), T, T, NORMED),
    "R2": (lambda: EuclideanSpace(2), T, T, NORMED),
    "R3": (lambda: EuclideanSpace(3), T, T, NORMED),
    "circle": (lambda: _sub(R.Circle(), "unit circle", [(_v(1, 0), _v(-1, 0))]), T, F,
               "chordal metric on the unit circle is round; " + COMPACT),
    "segment": (lambda: _sub(R.Segment((-1, 0), (1, 0)), "[-1,1] x {0}"), T, F,
                "segment [-1,1] x {0} is round; " + COMPACT),
    "two-point": (lambda: _sub(R.IntersectionRegion([R.Circle(), R.Segment((-1, 0), (1, 0))]),
                               "circle n segment"), F, F,
                  "circle meets the segment in two isolated points: neither round nor sleek"),
    "arc-X1": (lambda: _sub(X1, "open arc X1"), U, T, "open quarter arc around (1,0): sleek"),
    "arc-X2": (lambda: _sub(X2, "open arc X2"), U, T, "open quarter arc around (-1,0): sleek"),
    "arcs-Z": (lambda: _sub(R.UnionRegion([X1, X2]), "arcs X1 u X2", [(_v(1, 0), _v(-1, 0))]), U, F,
               "union of the opposite arcs: the closed ball of radius 2 about (1,0) is all of Z and has "
               "Z as interior, unlike the open ball; the displayed identity in the source repeats the "
               "closed ball on both sides and is read with the open ball on the right"),
    "halfplane-Y1": (lambda: _sub(Y1, "R x (-inf,0]"), U, T, "closed lower half-plane: sleek"),
    "halfplane-Y2": (lambda: _sub(Y2, "[0,inf) x R"), U, T, "closed right half-plane: sleek"),
    "quadrant": (lambda: _sub(R.IntersectionRegion([Y1, Y2]), "[0,inf) x (-inf,0]", [(_v(1, -1), _v(0, 0))]),
                 U, F, "corner of the quadrant is interior to B[(1,-1), sqrt 2]: not sleek"),
    "two-lines": (_two_lines, F, T, "R x {0,1}: (a, 1-b) is outside the closure of B((a,b), 1); sleek"),
    "product-D": (product_d_space, F, T,
                  "weighted series metric on {0,1} x R^N: sleek although the factor {0,1} is not; "
                  "not round since that factor is not round"),
    "dictionary-plane": (lambda: euclidean_product([DiscreteSpace(["u", "v", "w"]),
                                                    IntervalSpace(IntervalUnion.real_line())]), U, T,
                         "discrete labels times the line (finite label set): sleek"),
    "closed-disk": (lambda: _sub(R.Disk((0, 0), 1, closed=True), "closed unit disk",
                                 [(_v(1, 0), _v(-1, 0))]), T, F,
                    "convex, hence lambda-convex and round; " + COMPACT),
}

NAMES = tuple(_BUILDERS)


def gallery_space(name: str) -> GalleryEntry:
    if name not in _BUILDERS:
        raise UnknownName(f"no gallery entry named {name!r}")
    build, er, es, prov = _BUILDERS[name]
    space = build()
    space.definition = {"type": "gallery", "name": name}
    return GalleryEntry(name, space, er, es, prov)


def entries() -> List[GalleryEntry]:
    return [gallery_space(n) for n in NAMES]
