"""Ball membership, closure membership and the exterior limit-point test.

A ``Yes`` always carries a finite sequence of domain points approaching the
target at geometrically shrinking scales.  A ``No`` is only returned when a
space-level certificate (exact domain, analytic ball oracle, isolation or
polyhedral clipping) proves that some ``B(y, eps)`` with ``eps > sep_eps``
behaves as claimed; sampling alone never produces a ``No``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InvalidQuery
from .numbers import BoundedReal, Cmp, RefinementCounter, compare, lift
from .points import format_point
from .space import MetricSpace, ToleranceConfig, derive_seed


class BallKind(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BallQuery:
    center: object
    radius: BoundedReal
    kind: BallKind = BallKind.OPEN

    def __post_init__(self):
        object.__setattr__(self, "radius", lift(self.radius))
        if self.radius.lo <= 0:
            raise InvalidQuery("ball radius must be certified positive")


@dataclass(frozen=True)
class Step:
    """One point of a witness sequence with its distances to the target and to the center."""

    point: object
    to_target: BoundedReal
    to_center: BoundedReal


@dataclass
class TopoAnswer:
    verdict: Answer
    sequence: List[Step] = field(default_factory=list)
    separation: Optional[Fraction] = None
    certificate: str = ""
    samples: int = 0
    refinements: int = 0

    @property
    def yes(self) -> bool:
        return self.verdict is Answer.YES

    @property
    def no(self) -> bool:
        return self.verdict is Answer.NO


def scales(cfg: ToleranceConfig) -> List[Fraction]:
    """Shrinking target distances ``grid_delta * 2^(L-1-k)``; the last one is ``grid_delta``."""
    L = cfg.witness_length
    return [cfg.grid_delta * 2 ** (L - 1 - k) for k in range(L)]


def ball_member(space: MetricSpace, q: BallQuery, y, cfg: Optional[ToleranceConfig] = None) -> TopoAnswer:
    cfg = cfg or ToleranceConfig()
    space.check(y)
    counter = RefinementCounter()
    d = space.dist(q.center, y)
    order = compare(d, q.radius, cfg.precision_cap, counter)
    if order is Cmp.UNKNOWN:
        return TopoAnswer(Answer.UNKNOWN, refinements=counter.count)
    inside = order is Cmp.LT or (order is Cmp.EQ and q.kind is BallKind.CLOSED)
    return TopoAnswer(Answer.YES if inside else Answer.NO, certificate=f"d = {d!r} vs r", refinements=counter.count)


def _approach(space, target, center, r, cfg, counter, want: Cmp, salt: str, moves) -> Tuple[List[Step], Optional[Fraction], int]:
    """Points tending to ``target`` whose distance to ``center`` compares to ``r`` as ``want``.

    Returns the sequence, the first scale at which the search failed (``None``
    on success) and the number of candidates examined.
    """
    sequence: List[Step] = []
    tried = 0
    previous: Optional[BoundedReal] = None
    tag = f"{format_point(center)}|{format_point(target)}"
    own = (lambda zs: zs) if space.moves_are_members else (lambda zs: (z for z in zs if space.contains(z)))
    for k, s in enumerate(scales(cfg)):
        found = None

        def pool():
            yield from own(moves(target, center, s / 2))
            if previous is not None and 0 < previous.lo < s:
                # a shorter step still fits when the last pick landed close
                yield from own(moves(target, center, previous.lo / 2))
            seed = derive_seed(cfg.seed, salt, k, tag)
            yield from space.iter_near(target, s, cfg.samples_per_scale, seed, cfg.precision_cap, checked=False)

        # prefer a point at least s/16 away so later scales keep room to decrease
        for z in pool():
            tried += 1
            to_target = space.dist(z, target)
            if to_target.hi == 0 or compare(to_target, s, cfg.precision_cap, counter) is not Cmp.LT:
                continue
            if previous is not None and compare(to_target, previous, cfg.precision_cap, counter) is not Cmp.LT:
                continue
            to_center = space.dist(center, z)
            if compare(to_center, r, cfg.precision_cap, counter) is want:
                if found is None or to_target.lo > found.to_target.lo:
                    found = Step(z, to_target, to_center)
                if to_target.lo >= s / 16:
                    break
        if found is None:
            return sequence, s, tried
        sequence.append(found)
        previous = found.to_target
    return sequence, None, tried


def _separations(start: Fraction, cfg: ToleranceConfig):
    eps = start
    while eps > cfg.sep_eps:
        yield eps
        eps /= 2


def closure_contains(space: MetricSpace, q: BallQuery, y, cfg: Optional[ToleranceConfig] = None,
                     distance: Optional[BoundedReal] = None) -> TopoAnswer:
    """Is ``y`` in the closure of the open ball ``q``?

    ``distance`` may pass a precomputed ``d(center, y)``; passing the radius
    object itself marks ``y`` as a sphere point without a comparison.
    """
    cfg = cfg or ToleranceConfig()
    space.check(y)
    if q.kind is BallKind.CLOSED:
        # closed balls are closed sets
        return ball_member(space, q, y, cfg)
    counter = RefinementCounter()
    x, r = q.center, q.radius
    d = space.dist(x, y) if distance is None else distance
    order = compare(d, r, cfg.precision_cap, counter)
    if order is Cmp.LT:
        return TopoAnswer(Answer.YES, [Step(y, BoundedReal(0), d)], certificate="member", refinements=counter.count)
    if order is Cmp.GT:
        gap = (d - r).refined(cfg.precision_cap).lo
        if gap > cfg.sep_eps:
            return TopoAnswer(Answer.NO, separation=gap, certificate="triangle", refinements=counter.count)
    sequence, failed, tried = _approach(space, y, x, r, cfg, counter, Cmp.LT, "closure", space.toward_candidates)
    if failed is None:
        return TopoAnswer(Answer.YES, sequence, certificate="sequence", samples=tried, refinements=counter.count)
    if order is Cmp.EQ:
        for eps in _separations(failed, cfg):
            if space.certify_not_in_closure(x, y, eps, cfg):
                return TopoAnswer(Answer.NO, sequence, eps, "not-in-closure", tried, counter.count)
    return TopoAnswer(Answer.UNKNOWN, sequence, samples=tried, refinements=counter.count)


def sphere_radius(space: MetricSpace, x, y, cfg: ToleranceConfig) -> BoundedReal:
    """``d(x, y)``, rejected unless certified positive and no wider than ``sep_eps``."""
    r = space.dist(x, y)
    if compare(r, 0, cfg.precision_cap) is not Cmp.GT:
        raise InvalidQuery("the sphere radius d(x, y) must be certified positive")
    if r.width > cfg.sep_eps:
        r = r.refined(cfg.precision_cap)
        if r.width > cfg.sep_eps:
            raise InvalidQuery("d(x, y) is too uncertain to decide the sphere condition")
    return r


def exterior_limit_point(space: MetricSpace, x, y, cfg: Optional[ToleranceConfig] = None) -> TopoAnswer:
    """Is ``y`` a limit of points outside the closed ball ``B[x, d(x, y)]``?"""
    cfg = cfg or ToleranceConfig()
    space.check(x)
    space.check(y)
    r = sphere_radius(space, x, y, cfg)
    counter = RefinementCounter()
    sequence, failed, tried = _approach(space, y, x, r, cfg, counter, Cmp.GT, "exterior", space.away_candidates)
    if failed is None:
        return TopoAnswer(Answer.YES, sequence, certificate="sequence", samples=tried, refinements=counter.count)
    for eps in _separations(failed, cfg):
        if space.certify_interior(x, y, eps, cfg):
            return TopoAnswer(Answer.NO, sequence, eps, "interior", tried, counter.count)
    return TopoAnswer(Answer.UNKNOWN, sequence, samples=tried, refinements=counter.count)
