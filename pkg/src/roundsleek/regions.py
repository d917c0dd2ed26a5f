"""Regions of R^n with exact membership for rational points.

Besides membership every region offers rational candidate samplers,
a few "special" points (corners, endpoints, axis points) where
counterexamples concentrate, and -- when it has one -- a polyhedral
over-approximation used by the certificate code in :mod:`.constructions`.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from . import points as P
from .errors import SpaceDefinitionError
from .intervals import Interval, IntervalUnion, intervals_to_json
from .numbers import format_rational, sqrt

Vec = Tuple[Fraction, ...]
HalfPlanes = List[Tuple[Vec, Fraction]]  # each entry n, c means n . p <= c
WINDOW = Fraction(4)
_DENOMS = (1, 2, 3, 4, 5, 8, 16)


def dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def cross(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def sub(a, b) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def sq(a) -> Fraction:
    return dot(a, a)


def _rand_rational(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    den = rng.choice(_DENOMS)
    return lo + (hi - lo) * Fraction(rng.randint(0, 4 * den), 4 * den)


def _box_point(rng, center: Vec, radius: Fraction) -> Vec:
    return tuple(c + radius * Fraction(rng.randint(-63, 63), 64) for c in center)


def _window_point(rng, dim: int) -> Vec:
    return tuple(_rand_rational(rng, -WINDOW, WINDOW) for _ in range(dim))


def _to_fraction(x: float, max_den: int = 1 << 16) -> Fraction:
    return Fraction(x).limit_denominator(max_den)


class Region:
    dim = 2

    def contains(self, p) -> bool:
        raise NotImplementedError

    def candidates(self, rng: random.Random, count: int, center=None, radius=None) -> list:
        raise NotImplementedError

    def special_points(self) -> list:
        return []

    def finite_points(self) -> Optional[list]:
        return None

    def pieces(self) -> Optional[List[HalfPlanes]]:
        """Convex polyhedra whose union contains the closure of the region."""
        return None

    def enclosing_disk(self) -> Optional[Tuple[Vec, Fraction]]:
        """``(center, radius^2)`` of a disk containing the region."""
        return None

    def moves(self, p, step: Fraction):
        """Points of the region at most ``step`` from ``p`` along its own shape (curves only)."""
        return ()

    def diameter_bound_sq(self) -> Optional[Fraction]:
        disk = self.enclosing_disk()
        return None if disk is None else 4 * disk[1]

    def to_json(self) -> dict:
        raise NotImplementedError


class FullSpace(Region):
    def __init__(self, dim: int):
        self.dim = dim

    def contains(self, p) -> bool:
        if self.dim == 1:
            return isinstance(p, Fraction)
        return isinstance(p, tuple) and len(p) == self.dim

    def candidates(self, rng, count, center=None, radius=None):
        if self.dim == 1:
            return IntervalUnion.real_line().candidates(rng, count, center, radius)
        if center is None:
            return [_window_point(rng, self.dim) for _ in range(count)]
        return [_box_point(rng, center, radius) for _ in range(count)]

    def special_points(self):
        return [Fraction(0)] if self.dim == 1 else [tuple(Fraction(0) for _ in range(self.dim))]

    def pieces(self):
        return [[]]

    def to_json(self):
        return {"kind": "full", "dim": self.dim}


def _circle_point(center: Vec, radius: Fraction, t: Fraction, flip: bool) -> Vec:
    d = 1 + t * t
    u = ((1 - t * t) / d, 2 * t / d)
    if flip:
        u = (-u[0], -u[1])
    return (center[0] + radius * u[0], center[1] + radius * u[1])


def _circle_point_at(center: Vec, radius: Fraction, theta: float) -> Vec:
    """A rational point of the circle near angle ``theta``."""
    theta = math.remainder(theta, 2 * math.pi)
    flip = abs(theta) > math.pi / 2
    if flip:
        theta = math.remainder(theta - math.pi, 2 * math.pi)
    return _circle_point(center, radius, _to_fraction(math.tan(theta / 2)), flip)


def _angle_of(center: Vec, p: Vec) -> float:
    return math.atan2(float(p[1] - center[1]), float(p[0] - center[0]))


def _int_dir(v: Vec) -> Tuple[int, int]:
    a, b = Fraction(v[0]), Fraction(v[1])
    return a.numerator * b.denominator, b.numerator * a.denominator


def _same_direction(u: Vec, v: Vec) -> bool:
    return cross(u, v) == 0 and dot(u, v) > 0


def _ccw_less(ref: Vec, u: Vec, w: Vec) -> bool:
    """Whether the counterclockwise angle from ``ref`` to ``u`` is below that to ``w``."""

    def frame(v):
        x, y = dot(ref, v), cross(ref, v)
        half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
        return half, (x, y)

    hu, fu = frame(u)
    hw, fw = frame(w)
    if hu != hw:
        return hu < hw
    return cross(fu, fw) > 0


class Disk(Region):
    def __init__(self, center, radius, closed: bool = True):
        self.center = P.vec(*center)
        self.radius = Fraction(radius)
        self.closed = closed

    def contains(self, p) -> bool:
        if not (isinstance(p, tuple) and len(p) == 2):
            return False
        s = sq(sub(p, self.center))
        r2 = self.radius ** 2
        return s < r2 or (self.closed and s == r2)

    def candidates(self, rng, count, center=None, radius=None):
        if center is None:
            center, radius = self.center, self.radius
        out = [_box_point(rng, center, radius) for _ in range(count)]
        if self.closed:
            theta = _angle_of(self.center, center) if center != self.center else 0.0
            spread = float(radius / self.radius) if center != self.center else math.pi
            for _ in range(max(2, count // 3)):
                out.append(_circle_point_at(self.center, self.radius, theta + spread * rng.uniform(-1, 1)))
        return out

    def special_points(self):
        c, r = self.center, self.radius
        pts = [c]
        if self.closed:
            pts += [(c[0] + r, c[1]), (c[0] - r, c[1]), (c[0], c[1] + r), (c[0], c[1] - r)]
        return pts

    def enclosing_disk(self):
        return self.center, self.radius ** 2

    def to_json(self):
        return {
            "kind": "disk",
            "center": [format_rational(c) for c in self.center],
            "radius": format_rational(self.radius),
            "closed": self.closed,
        }


class CircleArc(Region):
    """Points of a circle whose direction runs counterclockwise from ``start`` to ``end``.

    ``start``/``end`` are rational direction vectors (any length); both
    ``None`` means the full circle.
    """

    def __init__(self, center, radius, start=None, end=None, closed: bool = False):
        self.center = P.vec(*center)
        self.radius = Fraction(radius)
        self.start = None if start is None else P.vec(*start)
        self.end = None if end is None else P.vec(*end)
        self.closed = closed
        if (self.start is None) != (self.end is None):
            raise ValueError("give both arc directions or neither")

    @property
    def full(self) -> bool:
        return self.start is None

    def in_arc(self, v: Vec) -> bool:
        if self.full:
            return True
        # direction tests are scale invariant, so work on integer multiples
        v = _int_dir(v)
        start, end = self._int_ends
        if _same_direction(start, v) or _same_direction(end, v):
            return self.closed
        return _ccw_less(start, v, end)

    @property
    def _int_ends(self):
        ends = self.__dict__.get("_ends")
        if ends is None:
            ends = self.__dict__["_ends"] = (_int_dir(self.start), _int_dir(self.end))
        return ends

    def contains(self, p) -> bool:
        if not (isinstance(p, tuple) and len(p) == 2):
            return False
        v = sub(p, self.center)
        a, b = v
        r = Fraction(self.radius)
        da, db, dr = a.denominator, b.denominator, r.denominator
        lhs = (a.numerator * db) ** 2 + (b.numerator * da) ** 2
        return lhs * dr * dr == (r.numerator * da * db) ** 2 and self.in_arc(v)

    def _angle_range(self) -> Tuple[float, float]:
        if self.full:
            return -math.pi, math.pi
        a = math.atan2(float(self.start[1]), float(self.start[0]))
        b = math.atan2(float(self.end[1]), float(self.end[0]))
        while b <= a:
            b += 2 * math.pi
        return a, b

    def candidates(self, rng, count, center=None, radius=None):
        if center is None:
            a, b = self._angle_range()
            return [_circle_point_at(self.center, self.radius, rng.uniform(a, b)) for _ in range(count)]
        theta = _angle_of(self.center, center)
        spread = min(math.pi, 1.05 * float(radius / self.radius))
        return (
            _circle_point_at(self.center, self.radius, theta + spread * rng.uniform(-1, 1))
            for _ in range(count)
        )

    def special_points(self):
        c, r = self.center, self.radius
        axis = [(c[0] + r, c[1]), (c[0], c[1] + r), (c[0] - r, c[1]), (c[0], c[1] - r)]
        pts = [p for p in axis if self.contains(p)]
        if not self.full and self.closed:
            for d in (self.start, self.end):
                norm = sqrt(sq(d))
                if norm.is_exact:
                    pts.append(tuple(ci + r * di / norm.lo for ci, di in zip(c, d)))
        return pts

    def enclosing_disk(self):
        return self.center, self.radius ** 2

    def moves(self, p, step):
        # rotation by a rational angle keeps rational points exactly on the circle;
        # shorter rotations reach the sliver left before an open end
        v = sub(p, self.center)
        for shrink in (1, 4, 16, 64):
            # t = 1/m turns by about 2/m radians with small denominators
            t = Fraction(1, math.ceil(2 * shrink * self.radius / step))
            d = 1 + t * t
            c, s = (1 - t * t) / d, 2 * t / d
            for sign in (1, -1):
                w = (c * v[0] - sign * s * v[1], sign * s * v[0] + c * v[1])
                if self.in_arc(w):
                    yield (self.center[0] + w[0], self.center[1] + w[1])

    def to_json(self):
        out = {
            "kind": "arc",
            "center": [format_rational(c) for c in self.center],
            "radius": format_rational(self.radius),
            "closed": self.closed,
        }
        if not self.full:
            out["start"] = [format_rational(c) for c in self.start]
            out["end"] = [format_rational(c) for c in self.end]
        return out


def Circle(center=(0, 0), radius=1) -> CircleArc:
    return CircleArc(center, radius)


class Segment(Region):
    def __init__(self, p, q, closed: bool = True):
        self.p = P.vec(*p)
        self.q = P.vec(*q)
        self.closed = closed
        if self.p == self.q:
            raise ValueError("degenerate segment")

    def param(self, z: Vec) -> Optional[Fraction]:
        d = sub(self.q, self.p)
        w = sub(z, self.p)
        if cross(d, w) != 0:
            return None
        return dot(w, d) / sq(d)

    def contains(self, z) -> bool:
        if not (isinstance(z, tuple) and len(z) == 2):
            return False
        t = self.param(z)
        if t is None:
            return False
        return 0 <= t <= 1 if self.closed else 0 < t < 1

    def at(self, t: Fraction) -> Vec:
        return tuple(a + t * (b - a) for a, b in zip(self.p, self.q))

    def candidates(self, rng, count, center=None, radius=None):
        if center is None:
            return [self.at(Fraction(rng.randint(0, 64), 64)) for _ in range(count)]
        d = sub(self.q, self.p)
        t0 = dot(sub(center, self.p), d) / sq(d)
        dt = radius / _to_fraction(math.sqrt(sq(d)) + 1e-12)
        out = [self.at(t0 + dt * Fraction(rng.randint(-63, 63), 64)) for _ in range(count)]
        for t in (Fraction(0), Fraction(1)):
            out.append(self.at(t))
        return out

    def special_points(self):
        pts = [self.at(Fraction(1, 2))]
        if self.closed:
            pts += [self.p, self.q]
        return pts

    def pieces(self):
        d = sub(self.q, self.p)
        n = (-d[1], d[0])
        return [[
            (n, dot(n, self.p)),
            ((-n[0], -n[1]), -dot(n, self.p)),
            (d, dot(d, self.q)),
            ((-d[0], -d[1]), -dot(d, self.p)),
        ]]

    def enclosing_disk(self):
        mid = self.at(Fraction(1, 2))
        return mid, sq(sub(self.q, self.p)) / 4

    def to_json(self):
        return {
            "kind": "segment",
            "p": [format_rational(c) for c in self.p],
            "q": [format_rational(c) for c in self.q],
            "closed": self.closed,
        }


class HalfPlane(Region):
    """``normal . p <= offset`` (strict when open)."""

    def __init__(self, normal, offset=0, closed: bool = True):
        self.normal = P.vec(*normal)
        self.offset = Fraction(offset)
        self.closed = closed

    def contains(self, p) -> bool:
        if not (isinstance(p, tuple) and len(p) == 2):
            return False
        v = dot(self.normal, p)
        return v < self.offset or (self.closed and v == self.offset)

    def project(self, p: Vec) -> Vec:
        n = self.normal
        k = (dot(n, p) - self.offset) / sq(n)
        return (p[0] - k * n[0], p[1] - k * n[1])

    def candidates(self, rng, count, center=None, radius=None):
        if center is None:
            pts = [_window_point(rng, 2) for _ in range(count)]
        else:
            pts = [_box_point(rng, center, radius) for _ in range(count)]
        if self.closed:
            pts += [self.project(p) for p in pts[: max(2, count // 3)]]
        return pts

    def special_points(self):
        return [self.project((Fraction(0), Fraction(0)))] if self.closed else []

    def pieces(self):
        return [[(self.normal, self.offset)]]

    def to_json(self):
        return {
            "kind": "halfplane",
            "normal": [format_rational(c) for c in self.normal],
            "offset": format_rational(self.offset),
            "closed": self.closed,
        }


class LabelSet(Region):
    dim = 1

    def __init__(self, labels):
        self.labels = tuple(lab if isinstance(lab, P.Label) else P.Label(str(lab)) for lab in labels)

    def contains(self, p) -> bool:
        return isinstance(p, P.Label) and p in self.labels

    def candidates(self, rng, count, center=None, radius=None):
        if center is None or radius > 1:
            return [rng.choice(self.labels) for _ in range(count)]
        return [center] if self.contains(center) else []

    def special_points(self):
        return list(self.labels)

    def finite_points(self):
        return list(self.labels)

    def to_json(self):
        return {"kind": "labels", "labels": [lab.name for lab in self.labels]}


class ProductRegion(Region):
    """Componentwise product; points are vectors, or :class:`~roundsleek.points.Pair` when a factor holds labels."""

    def __init__(self, factors: Sequence):
        self.factors = tuple(factors)
        self.dim = len(self.factors)
        self.pairwise = any(isinstance(f, LabelSet) for f in self.factors)
        if self.pairwise and self.dim != 2:
            raise ValueError("label factors are supported in two-factor products only")

    def _coords(self, p):
        if self.pairwise:
            return (p.first, p.second) if isinstance(p, P.Pair) else None
        return p if isinstance(p, tuple) and len(p) == self.dim else None

    def _build(self, coords):
        return P.Pair(*coords) if self.pairwise else tuple(coords)

    def contains(self, p) -> bool:
        coords = self._coords(p)
        return coords is not None and all(f.contains(c) for f, c in zip(self.factors, coords))

    def moves(self, p, step):
        # single-axis moves along the factors that are intervals
        coords = self._coords(p)
        if coords is None:
            return
        for i, f in enumerate(self.factors):
            if isinstance(f, LabelSet):
                continue
            for shrink in (1, 4):
                for sign in (1, -1):
                    c = coords[i] + sign * step / shrink
                    if f.contains(c):
                        yield self._build(coords[:i] + (c,) + coords[i + 1:])

    def candidates(self, rng, count, center=None, radius=None):
        if center is None:
            cols = [f.candidates(rng, count) for f in self.factors]
        else:
            coords = self._coords(center)
            if coords is None:
                return []
            cols = [f.candidates(rng, count, c, radius) for f, c in zip(self.factors, coords)]
            # keep the centre's own coordinate available so single-axis moves are drawn
            cols = [col + [c] for col, c in zip(cols, coords)]
        cols = [[c for c in col if f.contains(c)] for f, col in zip(self.factors, cols)]
        if any(not col for col in cols):
            return []
        return [self._build([rng.choice(col) for col in cols]) for _ in range(count)]

    def special_points(self):
        specials = [f.special_points()[:6] for f in self.factors]
        return [self._build(c) for c in product(*specials)][:36]

    def finite_points(self):
        cols = [f.finite_points() for f in self.factors]
        if any(c is None for c in cols):
            return None
        return [self._build(c) for c in product(*cols)]

    def pieces(self):
        if self.pairwise or not all(isinstance(f, IntervalUnion) for f in self.factors):
            return None
        out = []
        for boxes in product(*(f.pieces() for f in self.factors)):
            planes: HalfPlanes = []
            for axis, (lo, hi) in enumerate(boxes):
                e = tuple(Fraction(1 if i == axis else 0) for i in range(self.dim))
                if hi is not None:
                    planes.append((e, hi))
                if lo is not None:
                    planes.append((tuple(-c for c in e), -lo))
            out.append(planes)
        return out

    def diameter_bound_sq(self):
        if self.pairwise or not all(isinstance(f, IntervalUnion) and f.is_bounded for f in self.factors):
            return None
        return sum(((f.sup() - f.inf()) ** 2 for f in self.factors), Fraction(0))

    def to_json(self):
        return {"kind": "product", "factors": [f.to_json() for f in self.factors]}


class UnionRegion(Region):
    def __init__(self, members: Sequence[Region]):
        self.members = tuple(members)
        self.dim = self.members[0].dim

    def contains(self, p) -> bool:
        return any(m.contains(p) for m in self.members)

    def candidates(self, rng, count, center=None, radius=None):
        per = max(1, count // len(self.members))
        out = []
        for m in self.members:
            out += m.candidates(rng, per, center, radius)
        return out

    def special_points(self):
        out = []
        for m in self.members:
            out += [p for p in m.special_points() if p not in out]
        return out

    def finite_points(self):
        cols = [m.finite_points() for m in self.members]
        if any(c is None for c in cols):
            return None
        out = []
        for c in cols:
            out += [p for p in c if p not in out]
        return out

    def pieces(self):
        cols = [m.pieces() for m in self.members]
        if any(c is None for c in cols):
            return None
        return [piece for col in cols for piece in col]

    def moves(self, p, step):
        return (z for m in self.members if m.contains(p) for z in m.moves(p, step))

    def enclosing_disk(self):
        disks = [m.enclosing_disk() for m in self.members]
        if any(d is None for d in disks) or len({d[0] for d in disks}) != 1:
            return None
        return disks[0][0], max(d[1] for d in disks)

    def to_json(self):
        return {"kind": "union", "members": [m.to_json() for m in self.members]}


class IntersectionRegion(Region):
    def __init__(self, members: Sequence[Region]):
        self.members = tuple(members)
        self.dim = self.members[0].dim

    def contains(self, p) -> bool:
        return all(m.contains(p) for m in self.members)

    def _thinnest(self) -> Region:
        def rank(m):
            if m.finite_points() is not None:
                return 0
            if isinstance(m, (CircleArc, Segment)):
                return 1
            return 2

        return min(self.members, key=rank)

    def candidates(self, rng, count, center=None, radius=None):
        finite = self.finite_points()
        if finite is not None:
            return list(finite)
        return self._thinnest().candidates(rng, 3 * count, center, radius)

    def special_points(self):
        finite = self.finite_points()
        if finite is not None:
            return finite
        out = []
        for m in self.members:
            out += [p for p in m.special_points() if self.contains(p) and p not in out]
        return out

    def finite_points(self):
        for m in self.members:
            pts = m.finite_points()
            if pts is not None:
                return [p for p in pts if self.contains(p)]
        arcs = [m for m in self.members if isinstance(m, CircleArc)]
        segs = [m for m in self.members if isinstance(m, Segment)]
        if arcs and segs:
            pts = _circle_segment_points(arcs[0], segs[0])
            if pts is not None:
                return [p for p in pts if self.contains(p)]
        return None

    def pieces(self):
        cols = [m.pieces() for m in self.members]
        if any(c is None for c in cols):
            return None
        return [[plane for piece in combo for plane in piece] for combo in product(*cols)]

    def moves(self, p, step):
        return (z for m in self.members for z in m.moves(p, step) if self.contains(z))

    def enclosing_disk(self):
        disks = [m.enclosing_disk() for m in self.members if m.enclosing_disk() is not None]
        return min(disks, key=lambda d: d[1]) if disks else None

    def to_json(self):
        return {"kind": "intersection", "members": [m.to_json() for m in self.members]}


def _circle_segment_points(arc: CircleArc, seg: Segment) -> Optional[List[Vec]]:
    """Rational intersection points of a circle and a segment's line, if rational."""
    d = sub(seg.q, seg.p)
    w = sub(seg.p, arc.center)
    a, b, c = sq(d), 2 * dot(d, w), sq(w) - arc.radius ** 2
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    root = sqrt(disc)
    if not root.is_exact:
        return None
    ts = {(-b - root.lo) / (2 * a), (-b + root.lo) / (2 * a)}
    return [seg.at(t) for t in sorted(ts)]


# polyhedral certificates

def clip_polygon(poly: List[Vec], planes: HalfPlanes) -> List[Vec]:
    """Sutherland-Hodgman clipping of a convex polygon, exact in rationals."""
    for n, c in planes:
        if not poly:
            break
        out: List[Vec] = []
        for i, e in enumerate(poly):
            s = poly[i - 1]
            s_in, e_in = dot(n, s) <= c, dot(n, e) <= c
            if e_in:
                if not s_in:
                    out.append(_cut(s, e, n, c))
                out.append(e)
            elif s_in:
                out.append(_cut(s, e, n, c))
        poly = out
    return poly


def _cut(s: Vec, e: Vec, n: Vec, c: Fraction) -> Vec:
    t = (c - dot(n, s)) / dot(n, sub(e, s))
    return tuple(a + t * (b - a) for a, b in zip(s, e))


def box(center: Vec, half: Fraction) -> List[Vec]:
    x, y = center
    return [(x - half, y - half), (x + half, y - half), (x + half, y + half), (x - half, y + half)]


def max_sq_dist(poly: List[Vec], x: Vec) -> Fraction:
    return max(sq(sub(v, x)) for v in poly)


def min_sq_dist(poly: List[Vec], planes: HalfPlanes, x: Vec) -> Fraction:
    """Squared distance from ``x`` to a convex polygon (given with its clip planes)."""
    xs = [v[0] for v in poly]
    ys = [v[1] for v in poly]
    inside = all(dot(n, x) <= c for n, c in planes) and min(xs) <= x[0] <= max(xs) and min(ys) <= x[1] <= max(ys)
    if inside and _in_convex(poly, x):
        return Fraction(0)
    best = None
    for i, b in enumerate(poly):
        a = poly[i - 1]
        d = sub(b, a)
        dd = sq(d)
        t = Fraction(0) if dd == 0 else min(Fraction(1), max(Fraction(0), dot(sub(x, a), d) / dd))
        proj = tuple(ai + t * di for ai, di in zip(a, d))
        v = sq(sub(x, proj))
        best = v if best is None or v < best else best
    return best


def _in_convex(poly: List[Vec], x: Vec) -> bool:
    signs = set()
    for i, b in enumerate(poly):
        a = poly[i - 1]
        c = cross(sub(b, a), sub(x, a))
        if c != 0:
            signs.add(c > 0)
    return len(signs) <= 1


# JSON

def region_from_json(obj, path: str = "$"):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SpaceDefinitionError(path, "region must be an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "full":
            return FullSpace(int(obj["dim"]))
        if kind == "disk":
            return Disk(_vec(obj["center"], f"{path}.center"), _rat(obj["radius"], f"{path}.radius"), bool(obj.get("closed", True)))
        if kind == "arc":
            start = _vec(obj["start"], f"{path}.start") if "start" in obj else None
            end = _vec(obj["end"], f"{path}.end") if "end" in obj else None
            return CircleArc(_vec(obj["center"], f"{path}.center"), _rat(obj["radius"], f"{path}.radius"), start, end, bool(obj.get("closed", False)))
        if kind == "segment":
            return Segment(_vec(obj["p"], f"{path}.p"), _vec(obj["q"], f"{path}.q"), bool(obj.get("closed", True)))
        if kind == "halfplane":
            return HalfPlane(_vec(obj["normal"], f"{path}.normal"), _rat(obj.get("offset", "0"), f"{path}.offset"), bool(obj.get("closed", True)))
        if kind == "labels":
            return LabelSet(obj["labels"])
        if kind == "intervals":
            return interval_union_from_json(obj["intervals"], f"{path}.intervals")
        if kind == "product":
            return ProductRegion([region_from_json(f, f"{path}.factors[{i}]") for i, f in enumerate(obj["factors"])])
        if kind == "union":
            return UnionRegion([region_from_json(m, f"{path}.members[{i}]") for i, m in enumerate(obj["members"])])
        if kind == "intersection":
            return IntersectionRegion([region_from_json(m, f"{path}.members[{i}]") for i, m in enumerate(obj["members"])])
    except KeyError as exc:
        raise SpaceDefinitionError(path, f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SpaceDefinitionError):
            raise
        raise SpaceDefinitionError(path, str(exc)) from None
    raise SpaceDefinitionError(f"{path}.kind", f"unknown region kind {kind!r}")


def _rat(obj, path: str) -> Fraction:
    from .numbers import parse_rational

    if not isinstance(obj, str):
        raise SpaceDefinitionError(path, f"rationals must be 'p/q' strings, got {obj!r}")
    try:
        return parse_rational(obj)
    except ValueError as exc:
        raise SpaceDefinitionError(path, str(exc)) from None


def _vec(obj, path: str) -> Vec:
    if not isinstance(obj, list) or not obj:
        raise SpaceDefinitionError(path, "expected a nonempty list of 'p/q' strings")
    return tuple(_rat(c, f"{path}[{i}]") for i, c in enumerate(obj))


def interval_union_from_json(items, path: str = "$") -> IntervalUnion:
    if not isinstance(items, list):
        raise SpaceDefinitionError(path, "expected a list of intervals")
    out = []
    for i, item in enumerate(items):
        ipath = f"{path}[{i}]"
        if not isinstance(item, dict):
            raise SpaceDefinitionError(ipath, "interval must be an object")
        lo = None if item.get("lo") is None else _rat(item["lo"], f"{ipath}.lo")
        hi = None if item.get("hi") is None else _rat(item["hi"], f"{ipath}.hi")
        lo_closed = item.get("lo_closed", True)
        hi_closed = item.get("hi_closed", True)
        if not isinstance(lo_closed, bool) or not isinstance(hi_closed, bool):
            raise SpaceDefinitionError(ipath, "closedness flags must be booleans")
        iv = Interval(lo, hi, lo_closed, hi_closed)
        if iv.is_empty:
            raise SpaceDefinitionError(ipath, "empty interval")
        out.append(iv)
    return IntervalUnion(out)


__all__ = [
    "Region", "FullSpace", "Disk", "CircleArc", "Circle", "Segment", "HalfPlane", "LabelSet",
    "ProductRegion", "UnionRegion", "IntersectionRegion", "IntervalUnion", "region_from_json",
    "interval_union_from_json", "intervals_to_json", "clip_polygon", "box",
]
