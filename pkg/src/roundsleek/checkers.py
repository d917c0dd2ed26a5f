"""Roundness, sleekness and convexity checks.

Interval unions under the line metric are decided exactly from their
component types.  Everything else is searched: candidate pairs ``(x, y)``
are drawn from boundary-adjacent points first, and each pair runs the
topology queries at the sphere point ``y``.  A violation is reported only
with a certificate that :func:`replay_witness` can re-check.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import points as P
from . import regions as R
from .errors import InvalidParameter, InvalidQuery, NotLinear
from .intervals import Interval, IntervalUnion
from .numbers import BoundedReal, Cmp, RefinementCounter, compare, lift, maximum, parse_rational
from .space import IntervalSpace, MetricSpace, ToleranceConfig, rng_for
from .topology import Answer, BallQuery, closure_contains, exterior_limit_point, sphere_radius

UNKNOWN_SHARE = Fraction(1, 4)


class Verdict(enum.Enum):
    HOLDS_EXACT = "HoldsExact"
    HOLDS_AT_BUDGET = "HoldsAtBudget"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"

    @property
    def holds(self) -> bool:
        return self in (Verdict.HOLDS_EXACT, Verdict.HOLDS_AT_BUDGET)


class WitnessKind(enum.Enum):
    MIN_ON_OPEN_SET = "MinOnOpenSet"
    MAX_ON_OPEN_SET = "MaxOnOpenSet"
    SPHERE_NOT_LIMIT = "SphereNotLimit"
    CONVEXITY_GAP = "ConvexityGap"
    STRICT_CONVEXITY_GAP = "StrictConvexityGap"


@dataclass
class WitnessRecord:
    kind: WitnessKind
    points: Dict[str, object]
    value: BoundedReal
    separation: Optional[BoundedReal] = None
    note: str = ""


@dataclass
class Effort:
    pairs: int = 0
    samples: int = 0
    refinements: int = 0
    unknown: int = 0

    def add(self, answer) -> None:
        self.samples += answer.samples
        self.refinements += answer.refinements


@dataclass
class CheckVerdict:
    verdict: Verdict
    witness: Optional[WitnessRecord] = None
    effort: Effort = field(default_factory=Effort)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict.holds


def _budget_verdict(effort: Effort) -> Verdict:
    if effort.pairs and Fraction(effort.unknown, effort.pairs) > UNKNOWN_SHARE:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS_AT_BUDGET


# exact deciders on interval unions

def _require_two_points(X: IntervalUnion) -> None:
    if not X.has_two_points():
        raise InvalidParameter("the union needs at least two points")


def _near_side_point(iv: Interval, toward_right: bool) -> Fraction:
    """The point of ``iv`` closest to the neighbour on the given side, or an inner point."""
    end = iv.hi if toward_right else iv.lo
    if end is not None and iv.contains(end):
        return end
    return iv.inner_point()


def round_breakers(X: IntervalUnion) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """``(x, y, eps)`` with ``B(y, eps)`` missing ``B(x, |x - y|)`` and ``y`` on that sphere.

    One triple for every closed end facing a gap: a closed left end of a
    non-first component seen from the component before it, and a closed
    right end of a non-last component seen from the one after it.
    """
    comps = X.intervals
    out = []
    for i, iv in enumerate(comps):
        if i > 0 and iv.lo_closed:
            y, x = iv.lo, _near_side_point(comps[i - 1], True)
            gap = y - comps[i - 1].hi
            out.append((x, y, min(gap, y - x) / 2))
    for i, iv in enumerate(comps):
        if i < len(comps) - 1 and iv.hi_closed:
            y, x = iv.hi, _near_side_point(comps[i + 1], False)
            gap = comps[i + 1].lo - y
            out.append((x, y, min(gap, x - y) / 2))
    return out


def sleek_breakers(X: IntervalUnion) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """``(x, y, eps)`` with ``B(y, eps)`` inside ``B[x, |x - y|]``: closed ends and isolated points."""
    comps = X.intervals
    out = []
    for i, iv in enumerate(comps):
        if iv.is_singleton:
            iso = X.isolation_radius(iv.lo)
            other = comps[i + 1] if i + 1 < len(comps) else comps[i - 1]
            x = _near_side_point(other, i + 1 >= len(comps))
            out.append((x, iv.lo, min(iso, abs(x - iv.lo)) / 2))
            continue
        left_gap = None if i == 0 else iv.lo - comps[i - 1].hi
        right_gap = None if i == len(comps) - 1 else comps[i + 1].lo - iv.hi
        if iv.lo_closed:
            x = iv.inner_point()
            r = x - iv.lo
            out.append((x, iv.lo, min(r, left_gap) / 2 if left_gap is not None else r / 2))
        if iv.hi_closed:
            x = iv.inner_point()
            r = iv.hi - x
            out.append((x, iv.hi, min(r, right_gap) / 2 if right_gap is not None else r / 2))
    return out


def decide_round_interval_union(X: IntervalUnion) -> bool:
    """Exact: the line metric is round on ``X`` iff no closed end faces a gap."""
    _require_two_points(X)
    return not round_breakers(X)


def decide_sleek_interval_union(X: IntervalUnion) -> bool:
    """Exact: the line metric is sleek on ``X`` iff every component is an open interval."""
    _require_two_points(X)
    return all(iv.is_open and not iv.is_singleton for iv in X.intervals)


def _sphere_record(kind: WitnessKind, space: MetricSpace, x, y, eps: Fraction, note: str) -> WitnessRecord:
    return WitnessRecord(kind, {"x": x, "y": y}, space.dist(x, y), BoundedReal(eps), note)


# pair generation

def candidate_pairs(space: MetricSpace, cfg: ToleranceConfig, salt: str = "pairs"):
    """Ordered pairs: preferred ones, special x special, special x sampled, then sampled pairs."""
    seen = set()
    count = 0

    def fresh(x, y):
        key = (x, y)
        if x == y or key in seen:
            return False
        seen.add(key)
        return True

    for x, y in getattr(space, "preferred_pairs", ()):
        if fresh(x, y):
            count += 1
            yield x, y
    specials = [space.canonical(p) for p in space.special_points() if space.contains(p)]
    for x in specials:
        for y in specials:
            if count >= cfg.budget:
                return
            if fresh(x, y):
                count += 1
                yield x, y
    pool = space.sample_global(max(16, cfg.budget // 4), cfg.seed)
    rng = rng_for(cfg.seed, salt)
    if specials and pool:
        for x in specials:
            for y in rng.sample(pool, min(len(pool), 8)):
                for a, b in ((x, y), (y, x)):
                    if count >= cfg.budget:
                        return
                    if fresh(a, b):
                        count += 1
                        yield a, b
    if len(pool) < 2:
        return
    misses = 0
    while count < cfg.budget and misses < 4 * cfg.budget:
        x, y = rng.sample(pool, 2)
        if fresh(x, y):
            count += 1
            yield x, y
        else:
            misses += 1


# sampled checks

def _exact_round(X: IntervalUnion, space: MetricSpace) -> CheckVerdict:
    breakers = round_breakers(X)
    if not breakers:
        return CheckVerdict(Verdict.HOLDS_EXACT)
    x, y, eps = breakers[0]
    witness = _sphere_record(WitnessKind.MIN_ON_OPEN_SET, space, x, y, eps, "closed end facing a gap")
    return CheckVerdict(Verdict.VIOLATED, witness)


def _exact_sleek(X: IntervalUnion, space: MetricSpace) -> CheckVerdict:
    breakers = sleek_breakers(X)
    if not breakers:
        return CheckVerdict(Verdict.HOLDS_EXACT)
    x, y, eps = breakers[0]
    witness = _sphere_record(WitnessKind.MAX_ON_OPEN_SET, space, x, y, eps, "closed end or isolated point")
    return CheckVerdict(Verdict.VIOLATED, witness)


def _vacuous() -> CheckVerdict:
    return CheckVerdict(Verdict.HOLDS_EXACT, details={"reason": "a single point has no sphere of positive radius"})


def check_round(space: MetricSpace, cfg: Optional[ToleranceConfig] = None) -> CheckVerdict:
    """Search for a sphere point outside the closure of the open ball through it."""
    cfg = cfg or ToleranceConfig()
    X = space.exact_domain
    if X is not None:
        return _exact_round(X, space) if X.has_two_points() else _vacuous()
    effort = Effort()
    for x, y in candidate_pairs(space, cfg, "round"):
        effort.pairs += 1
        r = space.dist(x, y)
        if compare(r, 0, cfg.precision_cap) is not Cmp.GT:
            effort.unknown += 1
            continue
        if r.lo <= 0:
            r = r.refined(cfg.precision_cap)
        answer = closure_contains(space, BallQuery(x, r), y, cfg, distance=r)
        effort.add(answer)
        if answer.no:
            witness = _sphere_record(WitnessKind.MIN_ON_OPEN_SET, space, x, y, answer.separation, answer.certificate)
            return CheckVerdict(Verdict.VIOLATED, witness, effort)
        if not answer.yes:
            effort.unknown += 1
    return CheckVerdict(_budget_verdict(effort), None, effort)


def check_sleek(space: MetricSpace, cfg: Optional[ToleranceConfig] = None) -> CheckVerdict:
    """Search for a sphere point interior to its closed ball."""
    cfg = cfg or ToleranceConfig()
    X = space.exact_domain
    if X is not None:
        return _exact_sleek(X, space) if X.has_two_points() else _vacuous()
    effort = Effort()
    for x, y in candidate_pairs(space, cfg, "sleek"):
        effort.pairs += 1
        try:
            answer = exterior_limit_point(space, x, y, cfg)
        except InvalidQuery:
            effort.unknown += 1
            continue
        effort.add(answer)
        if answer.no:
            witness = _sphere_record(WitnessKind.MAX_ON_OPEN_SET, space, x, y, answer.separation, answer.certificate)
            return CheckVerdict(Verdict.VIOLATED, witness, effort)
        if not answer.yes:
            effort.unknown += 1
    return CheckVerdict(_budget_verdict(effort), None, effort)


def replay_witness(space: MetricSpace, witness: WitnessRecord, cfg: Optional[ToleranceConfig] = None) -> bool:
    """Re-certify a recorded violation from its points alone."""
    cfg = cfg or ToleranceConfig()
    pts = witness.points
    if witness.kind in (WitnessKind.MIN_ON_OPEN_SET, WitnessKind.MAX_ON_OPEN_SET):
        x, y = space.check(pts["x"]), space.check(pts["y"])
        eps = witness.separation.lo
        if eps <= cfg.sep_eps:
            return False
        if compare(space.dist(x, y), witness.value, cfg.precision_cap) is not Cmp.EQ and not witness.value.contains(
            space.dist(x, y).refined(cfg.precision_cap).lo
        ):
            return False
        if witness.kind is WitnessKind.MIN_ON_OPEN_SET:
            return space.certify_not_in_closure(x, y, eps, cfg)
        return space.certify_interior(x, y, eps, cfg)
    if witness.kind is WitnessKind.STRICT_CONVEXITY_GAP:
        x, y = space.check(pts["x"]), space.check(pts["y"])
        o = space.origin()
        r = maximum(space.dist(x, o), space.dist(y, o), cfg.precision_cap)
        m = P.scale(Fraction(1, 2), P.add(x, y))
        return x != y and compare(space.dist(m, o), r, cfg.precision_cap) in (Cmp.GT, Cmp.EQ)
    if witness.kind is WitnessKind.SPHERE_NOT_LIMIT:
        o, z = space.origin(), space.check(pts["z"])
        answer = exterior_limit_point(space, o, z, cfg)
        return answer.yes
    if witness.kind is WitnessKind.CONVEXITY_GAP:
        kind = ConvexityKind.parse(witness.note)
        return not _pair_satisfied(space, kind, pts["x"], pts["y"], cfg)[0]
    return False


# convexity

@dataclass(frozen=True)
class ConvexityKind:
    name: str  # "lambda", "metric", "external", "strong-external"
    param: Optional[Fraction] = None

    @classmethod
    def parse(cls, text: str) -> "ConvexityKind":
        name, _, arg = text.partition(":")
        name = name.strip().lower()
        if name not in ("lambda", "metric", "external", "strong-external"):
            raise InvalidParameter(f"unknown convexity kind {name!r}")
        param = parse_rational(arg) if arg else None
        kind = cls(name, param)
        kind.validate()
        return kind

    def validate(self) -> None:
        if self.name == "lambda":
            if self.param is None or not 0 < self.param < 1:
                raise InvalidParameter("lambda must lie strictly between 0 and 1")
        elif self.name == "strong-external":
            if self.param is None or self.param <= 0:
                raise InvalidParameter("strong external convexity needs a length s > 0")

    def __str__(self) -> str:
        return self.name if self.param is None else f"{self.name}:{self.param}"


_METRIC_TS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4), Fraction(1, 8))
_EXTERNAL_TS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1), Fraction(1, 16))


def _is_linear_point(p) -> bool:
    return isinstance(p, Fraction) or (isinstance(p, tuple) and all(isinstance(c, Fraction) for c in p))


def _exact_pair(X: IntervalUnion, kind: ConvexityKind, x: Fraction, y: Fraction):
    """Exact existence of the required ``z`` on an interval union; returns ``(ok, z)``."""
    if kind.name == "lambda":
        z = x + (1 - kind.param) * (y - x)
        return X.contains(z), z
    if kind.name == "metric":
        part = X.intersect_interval(Interval(min(x, y), max(x, y), False, False))
    elif kind.name == "external":
        part = X.intersect_interval(Interval(y, None, False, False) if y > x else Interval(None, y, False, False))
    else:
        z = x + kind.param * (1 if y > x else -1)
        return X.contains(z), z
    if part.is_empty:
        return False, None
    return True, part.intervals[0].inner_point()


def _locus(kind: ConvexityKind, x, y, d: BoundedReal):
    """Predicted witnesses ``(z, t)`` with ``z = x + t (y - x)`` on linear points."""
    if kind.name == "lambda":
        ts = [1 - kind.param]
    elif kind.name == "metric":
        ts = list(_METRIC_TS)
    elif kind.name == "external":
        ts = [1 + t for t in _EXTERNAL_TS]
    else:
        if not d.is_exact:
            return []
        ts = [kind.param / d.value]
    return [(P.lerp(x, y, t), t) for t in ts]


def _z_ok(space, kind, x, y, z, d, t, cfg, counter) -> Tuple[bool, Fraction]:
    """Does ``z`` realise the required equalities?  Also returns a near-miss gap."""
    cap = cfg.precision_cap
    dxz, dzy = space.dist(x, z), space.dist(z, y)
    if kind.name == "lambda":
        want_xz, want_zy = d * (1 - kind.param), d * kind.param
    elif kind.name == "metric":
        if z == x or z == y:
            return False, d.hi
        if t is None:
            total = dxz + dzy
            gap = abs((total - d).midpoint())
            return compare(total, d, cap, counter) is Cmp.EQ, gap
        want_xz, want_zy = d * t, d * (1 - t)
    elif kind.name == "external":
        if z == y:
            return False, d.hi
        if t is None:
            total = d + dzy
            return compare(total, dxz, cap, counter) is Cmp.EQ, abs((total - dxz).midpoint())
        want_xz, want_zy = d * t, d * (t - 1)
    else:
        s = kind.param
        want_xz, want_zy = BoundedReal(s), BoundedReal(s) - d
    ok = compare(dxz, want_xz, cap, counter) is Cmp.EQ and compare(dzy, want_zy, cap, counter) is Cmp.EQ
    gap = abs((dxz - want_xz).midpoint()) + abs((dzy - want_zy).midpoint())
    return ok, gap


def _pair_satisfied(space, kind: ConvexityKind, x, y, cfg, counter=None):
    """``(ok, z, gap)`` for one pair; ``ok`` is ``None`` when the pair is out of scope."""
    counter = counter or RefinementCounter()
    d = space.dist(x, y)
    if kind.name == "strong-external" and compare(d, kind.param, cfg.precision_cap) is not Cmp.LT:
        return None, None, None
    X = space.exact_domain
    if X is not None:
        ok, z = _exact_pair(X, kind, x, y)
        return ok, z, Fraction(0) if ok else d.hi
    best = None
    if _is_linear_point(x) and _is_linear_point(y):
        for z, t in _locus(kind, x, y, d):
            if not space.contains(z):
                continue
            ok, gap = _z_ok(space, kind, x, y, z, d, t, cfg, counter)
            if ok:
                return True, z, Fraction(0)
            best = gap if best is None else min(best, gap)
    # blind fallback around the predicted neighbourhood
    centre = y if kind.name in ("external", "strong-external") else x
    radius = (d.hi + (kind.param or 0) + 1)
    for z in space.sample_near(centre, radius, cfg.samples_per_scale, cfg.seed, cfg.precision_cap):
        ok, gap = _z_ok(space, kind, x, y, z, d, None, cfg, counter)
        if ok:
            return True, z, Fraction(0)
        best = gap if best is None else min(best, gap)
    return False, None, best if best is not None else d.hi


def _pythagorean_pairs(space, cfg, count):
    """Pairs at rational distance: ``y = x + d u`` with ``u`` a rational unit vector."""
    rng = rng_for(cfg.seed, "pythagorean")
    dirs = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(1), Fraction(0))]
    base = space.sample_global(count, cfg.seed)
    for x in base:
        if not isinstance(x, tuple):
            continue
        u = rng.choice(dirs)
        u = u + tuple(Fraction(0) for _ in range(len(x) - 2))
        d = Fraction(rng.randint(1, 8), rng.choice((1, 2, 4)))
        y = tuple(a + d * b for a, b in zip(x, u))
        if space.contains(y):
            yield x, y


def check_convexity(space: MetricSpace, kind, cfg: Optional[ToleranceConfig] = None, pairs=None) -> CheckVerdict:
    """Look for the intermediate or extending point required by ``kind`` for each pair."""
    cfg = cfg or ToleranceConfig()
    if isinstance(kind, str):
        kind = ConvexityKind.parse(kind)
    kind.validate()
    explicit = pairs is not None
    if pairs is None:
        if kind.name == "strong-external" and space.exact_domain is None:
            pairs = list(_pythagorean_pairs(space, cfg, min(cfg.budget, 64)))
        else:
            pairs = candidate_pairs(space, cfg, f"convexity:{kind}")
    effort = Effort()
    counter = RefinementCounter()
    exact = space.exact_domain is not None
    worst = None
    for i, (x, y) in enumerate(pairs):
        if i >= cfg.budget:
            break
        space.check(x)
        space.check(y)
        if x == y:
            continue
        ok, z, gap = _pair_satisfied(space, kind, x, y, cfg, counter)
        if ok is None:
            if explicit:
                raise InvalidParameter("strong external convexity needs s > d(x, y)")
            continue
        effort.pairs += 1
        if not ok:
            note = str(kind)
            witness = WitnessRecord(WitnessKind.CONVEXITY_GAP, {"x": x, "y": y}, space.dist(x, y), BoundedReal(gap), note)
            effort.refinements = counter.count
            details = {"certified": exact}
            return CheckVerdict(Verdict.VIOLATED, witness, effort, details)
        worst = z
    effort.refinements = counter.count
    return CheckVerdict(Verdict.HOLDS_AT_BUDGET, None, effort, {"last_z": worst})


def _translation_check(space: MetricSpace, cfg: ToleranceConfig, pool) -> None:
    rng = rng_for(cfg.seed, "translation")
    for _ in range(min(32, cfg.budget)):
        x, y, t = (rng.choice(pool) for _ in range(3))
        xt, yt = P.add(x, t), P.add(y, t)
        if not (space.contains(xt) and space.contains(yt)):
            continue
        if compare(space.dist(xt, yt), space.dist(x, y), cfg.precision_cap) in (Cmp.LT, Cmp.GT):
            raise NotLinear(f"translation by {P.format_point(t)} changes a distance")


def _linear_pool(space: MetricSpace, cfg: ToleranceConfig) -> list:
    if not space.linear:
        raise NotLinear(f"{space.name} has no linear structure")
    pool = [space.origin()] + [p for p in space.special_points() if space.contains(p)]
    pool += space.sample_global(max(16, min(cfg.budget, 128)), cfg.seed)
    # points far from the origin reach the plateaus of bounded metrics
    for k in (2, 3, 5, 8):
        p = P.scale(Fraction(k), pool[-1]) if pool[-1] != space.origin() else None
        if p is not None and space.contains(p):
            pool.append(p)
    pool = [p for p in pool if _is_linear_point(p)]
    _translation_check(space, cfg, pool)
    return pool


def check_strict_convexity(space: MetricSpace, cfg: Optional[ToleranceConfig] = None) -> CheckVerdict:
    """Midpoints of distinct points of ``B[0, r]`` must lie strictly inside it."""
    cfg = cfg or ToleranceConfig()
    pool = _linear_pool(space, cfg)
    o = space.origin()
    rng = rng_for(cfg.seed, "strict")
    counter = RefinementCounter()
    effort = Effort()
    for _ in range(cfg.budget):
        x, y = rng.sample(pool, 2)
        if x == y:
            continue
        effort.pairs += 1
        r = maximum(space.dist(x, o), space.dist(y, o), cfg.precision_cap)
        m = P.scale(Fraction(1, 2), P.add(x, y))
        order = compare(space.dist(m, o), r, cfg.precision_cap, counter)
        if order in (Cmp.GT, Cmp.EQ):
            effort.refinements = counter.count
            witness = WitnessRecord(WitnessKind.STRICT_CONVEXITY_GAP, {"x": x, "y": y, "midpoint": m}, r, None,
                                    "midpoint not strictly inside B[0, r]")
            return CheckVerdict(Verdict.VIOLATED, witness, effort)
        if order is Cmp.UNKNOWN:
            effort.unknown += 1
    effort.refinements = counter.count
    return CheckVerdict(_budget_verdict(effort), None, effort)


def check_strict_ball_convexity(space: MetricSpace, r, cfg: Optional[ToleranceConfig] = None, pairs=None,
                                lambdas=None) -> CheckVerdict:
    """Proper convex combinations of distinct points of ``B[0, r]`` must be interior to it."""
    cfg = cfg or ToleranceConfig()
    r = lift(r)
    if r.lo <= 0:
        raise InvalidParameter("r must be positive")
    pool = _linear_pool(space, cfg)
    o = space.origin()
    rng = rng_for(cfg.seed, "ball-convexity")
    if pairs is None:
        inside = [p for p in dict.fromkeys(pool) if compare(space.dist(p, o), r, cfg.precision_cap) in (Cmp.LT, Cmp.EQ)]
        if len(inside) < 2:
            return CheckVerdict(Verdict.INCONCLUSIVE, details={"reason": "too few sampled points in the ball"})
        pairs = [tuple(rng.sample(inside, 2)) for _ in range(cfg.budget)]
    lambdas = list(lambdas) if lambdas is not None else [Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)]
    effort = Effort()
    counter = RefinementCounter()
    for x, y in pairs:
        if x == y:
            raise InvalidParameter("strict ball convexity compares distinct points")
        for lam in lambdas:
            if not 0 < lam < 1:
                raise InvalidParameter("lambda must lie strictly between 0 and 1")
            effort.pairs += 1
            z = P.lerp(x, y, lam)
            order = compare(space.dist(z, o), r, cfg.precision_cap, counter)
            if order is Cmp.LT:
                continue
            if order is Cmp.GT:
                witness = WitnessRecord(WitnessKind.SPHERE_NOT_LIMIT, {"x": x, "y": y, "z": z}, r, None, "outside the ball")
                return CheckVerdict(Verdict.VIOLATED, witness, effort)
            if order is Cmp.UNKNOWN:
                effort.unknown += 1
                continue
            # z on the sphere: interior iff it is not a limit of the exterior
            answer = exterior_limit_point(space, o, z, cfg)
            effort.add(answer)
            if answer.yes:
                witness = WitnessRecord(WitnessKind.SPHERE_NOT_LIMIT, {"x": x, "y": y, "z": z}, r, None,
                                        "combination on the sphere is a limit of the exterior")
                return CheckVerdict(Verdict.VIOLATED, witness, effort)
            if not answer.no:
                effort.unknown += 1
    effort.refinements += counter.count
    return CheckVerdict(_budget_verdict(effort), None, effort)


# sleekness of unions

def _union_space(ambient: MetricSpace, regions: Sequence):
    from .constructions import subspace

    if all(isinstance(r, IntervalUnion) for r in regions):
        union = regions[0]
        for r in regions[1:]:
            union = union.union(r)
        return subspace(ambient, union)
    members = list(regions)
    return subspace(ambient, members[0] if len(members) == 1 else R.UnionRegion(members))


def check_union_sleekness(regions: Sequence, ambient: MetricSpace, cfg: Optional[ToleranceConfig] = None) -> CheckVerdict:
    """Sleekness of every pairwise union and of the whole union, flagging implication failures."""
    cfg = cfg or ToleranceConfig()
    regions = list(regions)
    if not regions:
        raise InvalidParameter("at least one region is required")
    full = check_sleek(_union_space(ambient, regions), cfg)
    if len(regions) == 1:
        full.details.update({"pairwise": {}, "contradiction": False})
        return full
    pairwise = {}
    for i, j in combinations(range(len(regions)), 2):
        pairwise[(i, j)] = check_sleek(_union_space(ambient, [regions[i], regions[j]]), cfg).verdict
    contradiction = all(v.holds for v in pairwise.values()) and full.verdict is Verdict.VIOLATED
    full.details.update({"pairwise": pairwise, "contradiction": contradiction})
    return full
