"""Finite unions of rational intervals and the real line metric on them."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .numbers import format_rational, parse_rational

WINDOW = Fraction(4)


@dataclass(frozen=True)
class Interval:
    """One component; ``None`` endpoints stand for -inf / +inf (always open)."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is None and self.lo_closed:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None and self.hi_closed:
            object.__setattr__(self, "hi_closed", False)

    @property
    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if self.lo < self.hi:
            return False
        return not (self.lo == self.hi and self.lo_closed and self.hi_closed)

    @property
    def is_singleton(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def is_compact(self) -> bool:
        return self.is_bounded and self.lo_closed and self.hi_closed

    @property
    def is_open(self) -> bool:
        return not self.lo_closed and not self.hi_closed and not self.is_singleton

    def contains(self, x: Fraction) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def closure_contains(self, x: Fraction) -> bool:
        return (self.lo is None or x >= self.lo) and (self.hi is None or x <= self.hi)

    def distance_to(self, x: Fraction) -> Fraction:
        if self.lo is not None and x < self.lo:
            return self.lo - x
        if self.hi is not None and x > self.hi:
            return x - self.hi
        return Fraction(0)

    def inner_point(self) -> Fraction:
        if self.lo is not None and self.hi is not None:
            return (self.lo + self.hi) / 2
        if self.lo is not None:
            return self.lo + 1
        if self.hi is not None:
            return self.hi - 1
        return Fraction(0)

    def intersect(self, other: "Interval") -> "Interval":
        lo, lo_closed = _max_lower((self.lo, self.lo_closed), (other.lo, other.lo_closed))
        hi, hi_closed = _min_upper((self.hi, self.hi_closed), (other.hi, other.hi_closed))
        return Interval(lo, hi, lo_closed, hi_closed)

    def __str__(self) -> str:
        if self.is_singleton:
            return "{" + format_rational(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else format_rational(self.lo)
        hi = "inf" if self.hi is None else format_rational(self.hi)
        return f"{left}{lo}, {hi}{right}"


def _max_lower(a, b):
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a[0], a[1] and b[1]


def _min_upper(a, b):
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a[0], a[1] and b[1]


def _lower_key(iv: Interval):
    # -inf first; at equal value a closed endpoint starts earlier
    return (0, 0, 0) if iv.lo is None else (1, iv.lo, 0 if iv.lo_closed else 1)


def _touches(left: Interval, right: Interval) -> bool:
    """Whether ``right`` (starting no earlier) overlaps or abuts ``left``."""
    if left.hi is None or right.lo is None:
        return True
    if right.lo < left.hi:
        return True
    if right.lo == left.hi:
        return left.hi_closed or right.lo_closed
    return False


class IntervalUnion:
    """A finite union of disjoint, non-abutting intervals in normal form."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        self.intervals: Tuple[Interval, ...] = _normalize(intervals)

    @classmethod
    def parse(cls, text: str) -> "IntervalUnion":
        """Parse e.g. ``"[0,1] u (2,3] u {5}"``."""
        parts = [p.strip() for p in text.replace("∪", "u").split("u") if p.strip()]
        out = []
        for part in parts:
            if part.startswith("{"):
                v = parse_rational(part.strip("{}"))
                out.append(Interval(v, v))
                continue
            lo_closed = part[0] == "["
            hi_closed = part[-1] == "]"
            lo_text, hi_text = part[1:-1].split(",")
            lo = None if lo_text.strip() in ("-inf", "-oo") else parse_rational(lo_text)
            hi = None if hi_text.strip() in ("inf", "oo", "+inf") else parse_rational(hi_text)
            out.append(Interval(lo, hi, lo_closed, hi_closed))
        return cls(out)

    @classmethod
    def real_line(cls) -> "IntervalUnion":
        return cls([Interval(None, None, False, False)])

    @classmethod
    def points(cls, values: Iterable) -> "IntervalUnion":
        return cls([Interval(Fraction(v), Fraction(v)) for v in values])

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __str__(self) -> str:
        return " u ".join(str(iv) for iv in self.intervals) if self.intervals else "{}"

    def __repr__(self) -> str:
        return f"IntervalUnion({self})"

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def is_bounded(self) -> bool:
        return all(iv.is_bounded for iv in self.intervals)

    @property
    def is_real_line(self) -> bool:
        return len(self.intervals) == 1 and self.intervals[0].lo is None and self.intervals[0].hi is None

    def has_two_points(self) -> bool:
        if len(self.intervals) >= 2:
            return True
        return bool(self.intervals) and not self.intervals[0].is_singleton

    def inf(self) -> Optional[Fraction]:
        return self.intervals[0].lo if self.intervals else None

    def sup(self) -> Optional[Fraction]:
        return self.intervals[-1].hi if self.intervals else None

    def contains(self, x) -> bool:
        if not isinstance(x, Fraction):
            return False
        return any(iv.contains(x) for iv in self.intervals)

    def closure_contains(self, x: Fraction) -> bool:
        return any(iv.closure_contains(x) for iv in self.intervals)

    def distance_to(self, x: Fraction) -> Optional[Fraction]:
        """``inf |x - s|`` over the set; ``None`` when the set is empty."""
        if not self.intervals:
            return None
        return min(iv.distance_to(x) for iv in self.intervals)

    def component_of(self, x: Fraction) -> Optional[Interval]:
        for iv in self.intervals:
            if iv.contains(x):
                return iv
        return None

    def intersect_interval(self, other: Interval) -> "IntervalUnion":
        return IntervalUnion(iv.intersect(other) for iv in self.intervals)

    def intersect(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(a.intersect(b) for a in self.intervals for b in other.intervals)

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(self.intervals + other.intervals)

    def open_ball(self, c: Fraction, r: Fraction) -> "IntervalUnion":
        return self.intersect_interval(Interval(c - r, c + r, False, False))

    def closed_ball(self, c: Fraction, r: Fraction) -> "IntervalUnion":
        return self.intersect_interval(Interval(c - r, c + r, True, True))

    def outside_closed_ball(self, c: Fraction, r: Fraction) -> "IntervalUnion":
        return self.intersect(
            IntervalUnion([Interval(None, c - r, False, False), Interval(c + r, None, False, False)])
        )

    def isolation_radius(self, x: Fraction) -> Optional[Fraction]:
        """Distance from an isolated point ``x`` to the rest; ``None`` if not isolated."""
        comp = self.component_of(x)
        if comp is None or not comp.is_singleton:
            return None
        others = [iv.distance_to(x) for iv in self.intervals if iv is not comp]
        return min(others) if others else Fraction(10**9)

    def endpoints(self) -> List[Fraction]:
        out = []
        for iv in self.intervals:
            for v in (iv.lo, iv.hi):
                if v is not None and v not in out:
                    out.append(v)
        return out

    # region protocol (one-dimensional)

    dim = 1

    def special_points(self) -> List[Fraction]:
        out: List[Fraction] = []
        for iv in self.intervals:
            for v in (iv.lo, iv.hi):
                if v is not None and iv.contains(v) and v not in out:
                    out.append(v)
            p = iv.inner_point()
            if iv.contains(p) and p not in out:
                out.append(p)
        return out

    def finite_points(self) -> Optional[List[Fraction]]:
        if all(iv.is_singleton for iv in self.intervals):
            return [iv.lo for iv in self.intervals]
        return None

    def candidates(self, rng: random.Random, count: int, center=None, radius=None) -> List[Fraction]:
        if not self.intervals:
            return []
        if center is None:
            return [self._sample_in(rng.choice(self.intervals), rng) for _ in range(count)]
        out = []
        for v in self.endpoints():
            if abs(v - center) < radius and self.contains(v):
                out.append(v)
        for _ in range(count):
            out.append(center + radius * Fraction(rng.randint(-63, 63), 64))
        return out

    @staticmethod
    def _sample_in(iv: Interval, rng: random.Random) -> Fraction:
        lo = iv.lo if iv.lo is not None else (min(-WINDOW, iv.hi - 1) if iv.hi is not None else -WINDOW)
        hi = iv.hi if iv.hi is not None else (max(WINDOW, lo + 1) if iv.lo is not None else WINDOW)
        if lo == hi:
            return lo
        den = rng.choice((2, 3, 4, 5, 8, 16, 64))
        k = rng.randint(0, den)
        x = lo + (hi - lo) * Fraction(k, den)
        if iv.contains(x):
            return x
        return (lo + hi) / 2

    def box_bounds(self) -> Optional[Tuple[Optional[Fraction], Optional[Fraction]]]:
        """Closure bounds when the set is a single interval."""
        if len(self.intervals) != 1:
            return None
        iv = self.intervals[0]
        return iv.lo, iv.hi

    def pieces(self) -> List[Tuple[Optional[Fraction], Optional[Fraction]]]:
        return [(iv.lo, iv.hi) for iv in self.intervals]

    def to_json(self) -> dict:
        return {"kind": "intervals", "intervals": intervals_to_json(self)}


def _normalize(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
    items = sorted((iv for iv in intervals if not iv.is_empty), key=_lower_key)
    merged: List[Interval] = []
    for iv in items:
        if merged and _touches(merged[-1], iv):
            last = merged[-1]
            hi, hi_closed = _max_upper((last.hi, last.hi_closed), (iv.hi, iv.hi_closed))
            merged[-1] = Interval(last.lo, hi, last.lo_closed, hi_closed)
        else:
            merged.append(iv)
    return tuple(merged)


def _max_upper(a, b):
    if a[0] is None or b[0] is None:
        return None, False
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a[0], a[1] or b[1]


def intervals_to_json(union: IntervalUnion) -> list:
    return [
        {
            "lo": None if iv.lo is None else format_rational(iv.lo),
            "hi": None if iv.hi is None else format_rational(iv.hi),
            "lo_closed": iv.lo_closed,
            "hi_closed": iv.hi_closed,
        }
        for iv in union
    ]


def random_interval_union(
    rng: random.Random, max_components: int = 6, max_den: int = 20, span: Tuple[int, int] = (0, 5)
) -> IntervalUnion:
    """A random normal-form union with at least two points.

    Endpoints are rationals with denominator at most ``max_den`` inside
    ``span``; roughly one component in six is a singleton.
    """
    while True:
        n = rng.randint(1, max_components)
        cuts = set()
        while len(cuts) < 2 * n:
            den = rng.randint(1, max_den)
            cuts.add(Fraction(rng.randint(span[0] * den, span[1] * den), den))
        cuts = sorted(cuts)
        comps = []
        for i in range(n):
            lo, hi = cuts[2 * i], cuts[2 * i + 1]
            if rng.random() < 1 / 6:
                comps.append(Interval(lo, lo))
            else:
                comps.append(Interval(lo, hi, rng.random() < 0.5, rng.random() < 0.5))
        union = IntervalUnion(comps)
        if union.has_two_points():
            return union


def as_union(obj) -> IntervalUnion:
    if isinstance(obj, IntervalUnion):
        return obj
    if isinstance(obj, str):
        return IntervalUnion.parse(obj)
    if isinstance(obj, Sequence):
        return IntervalUnion(obj)
    raise TypeError(f"cannot build an interval union from {obj!r}")
