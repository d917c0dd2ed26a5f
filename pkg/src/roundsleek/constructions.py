"""Combinators building new metric spaces from old ones."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import points as P
from . import regions as R
from .errors import DomainMismatch, EmptyRegion, InvalidParameter, MissingDiameter, UnknownTransform
from .intervals import IntervalUnion
from .numbers import (
    BoundedReal,
    Cmp,
    compare,
    lift,
    log1p,
    minimum,
    over_one_plus,
    rational_sqrt_lower,
    rational_sqrt_upper,
    sqrt,
    square_of,
)
from .space import (
    DiscreteSpace,
    EuclideanSpace,
    IntervalSpace,
    MetricSpace,
    ToleranceConfig,
    euclid_step,
    rng_for,
)


def _sqrt_upper(value: Fraction) -> BoundedReal:
    root = sqrt(value)
    return BoundedReal(root.hi)


# subspaces

class SubspaceSpace(MetricSpace):
    """An ambient space with its domain cut down to a region."""

    moves_are_members = True

    def __init__(self, ambient: MetricSpace, region, name: Optional[str] = None):
        self.ambient = ambient
        self.region = region
        self.name = name or f"{ambient.name} | {type(region).__name__}"
        self.linear = isinstance(region, R.FullSpace) and ambient.linear
        self._finite = region.finite_points()
        if self._finite is not None:
            self._finite = [p for p in self._finite if ambient.contains(p)]
        self.diameter = self._diameter_bound()
        if isinstance(ambient, EuclideanSpace) and ambient.dim == 2:
            self.definition = {"type": "region2d", "region": region.to_json()}
        elif ambient.definition is not None:
            self.definition = {"type": "subspace", "ambient": ambient.definition, "region": region.to_json()}

    def _diameter_bound(self) -> Optional[BoundedReal]:
        if self._finite is not None:
            best = BoundedReal(0)
            for p, q in cartesian(self._finite, repeat=2):
                d = self.ambient.dist(p, q)
                if d.hi > best.hi:
                    best = BoundedReal(d.hi)
            return best
        if isinstance(self.ambient, EuclideanSpace):
            bound = self.region.diameter_bound_sq()
            if bound is not None:
                return _sqrt_upper(bound)
        if self.ambient.diameter is not None:
            return BoundedReal(self.ambient.diameter.hi)
        return None

    @property
    def polyhedral(self) -> bool:
        return isinstance(self.ambient, EuclideanSpace) and self.ambient.dim == 2 and self.region.pieces() is not None

    def contains(self, p) -> bool:
        return self.ambient.contains(p) and self.region.contains(p)

    def dist(self, p, q) -> BoundedReal:
        return self.ambient.dist(p, q)

    def candidates_global(self, count, rng):
        if self._finite is not None:
            return list(self._finite)
        return self.region.candidates(rng, count)

    def candidates_near(self, p, radius, count, rng):
        if self._finite is not None:
            return list(self._finite)
        return self.region.candidates(rng, count, p, radius)

    def special_points(self):
        return [p for p in self.region.special_points() if self.contains(p)]

    def toward(self, y, x, step):
        z = self.ambient.toward(y, x, step)
        return z if z is not None and self.contains(z) else None

    def away(self, y, x, step):
        z = self.ambient.away(y, x, step)
        return z if z is not None and self.contains(z) else None

    def _moves(self, y, x, step, method):
        # moves along a curve first; ambient moves rarely land on one
        yield from (z for z in self.region.moves(y, step) if self.ambient.contains(z))
        yield from (z for z in getattr(self.ambient, method)(y, x, step) if self.contains(z))

    def toward_candidates(self, y, x, step):
        return self._moves(y, x, step, "toward_candidates")

    def away_candidates(self, y, x, step):
        return self._moves(y, x, step, "away_candidates")

    def isolation_radius(self, p):
        if self._finite is None or p not in self._finite:
            return None
        others = [self.ambient.dist(p, q).lo for q in self._finite if q != p]
        return min(others) if others else Fraction(10**9)

    def _pieces_near(self, y, eps):
        for planes in self.region.pieces():
            poly = R.clip_polygon(R.box(y, eps), planes)
            if poly:
                yield poly, planes

    def certify_not_in_closure(self, x, y, eps, cfg):
        if super().certify_not_in_closure(x, y, eps, cfg):
            return True
        if not self.polyhedral:
            return False
        r2 = R.sq(R.sub(x, y))
        return all(R.min_sq_dist(poly, planes, x) >= r2 for poly, planes in self._pieces_near(y, eps))

    def certify_interior(self, x, y, eps, cfg):
        if super().certify_interior(x, y, eps, cfg):
            return True
        if not self.polyhedral:
            return False
        r2 = R.sq(R.sub(x, y))
        return all(R.max_sq_dist(poly, x) <= r2 for poly, _ in self._pieces_near(y, eps))

    def origin(self):
        return self.ambient.origin()


def _probe_region(ambient: MetricSpace, region) -> bool:
    rng = rng_for(0, "probe")
    probes = list(region.special_points()) + list(region.candidates(rng, 64))
    finite = region.finite_points()
    if finite is not None:
        probes += finite
    return any(ambient.contains(p) and region.contains(p) for p in probes)


def subspace(ambient: MetricSpace, region, name: Optional[str] = None) -> MetricSpace:
    """Restrict ``ambient`` to ``region``."""
    if isinstance(ambient, IntervalSpace):
        if isinstance(region, R.FullSpace) and region.dim == 1:
            return ambient
        if isinstance(region, IntervalUnion):
            union = ambient.union.intersect(region)
            if union.is_empty:
                raise EmptyRegion("the region misses the ambient line set")
            return IntervalSpace(union, name)
        raise DomainMismatch("subsets of the line are given as interval unions")
    if isinstance(ambient, EuclideanSpace) and isinstance(region, R.FullSpace) and region.dim == ambient.dim:
        return ambient
    if isinstance(ambient, SubspaceSpace):
        return subspace(ambient.ambient, R.IntersectionRegion([ambient.region, region]), name)
    if getattr(region, "dim", None) != getattr(ambient, "dim", region.dim):
        raise DomainMismatch("region dimension differs from the ambient space")
    if not _probe_region(ambient, region):
        raise EmptyRegion("no probe point lies in the region")
    return SubspaceSpace(ambient, region, name)


# finite Euclidean-type products

class EuclideanProductSpace(MetricSpace):
    """``sqrt(sum d_i(x_i, y_i)^2)``; points are :class:`Pair` for two factors, tuples otherwise."""

    def __init__(self, factors: Sequence[MetricSpace]):
        self.factors = tuple(factors)
        self.name = " x ".join(f.name for f in self.factors)
        diams = [f.diameter for f in self.factors]
        if all(d is not None for d in diams):
            self.diameter = sqrt(sum((d.hi * d.hi for d in diams), Fraction(0)))
            self.diameter = BoundedReal(self.diameter.hi)
        if all(f.definition is not None for f in self.factors):
            self.definition = {"type": "product_euclid", "factors": [f.definition for f in self.factors]}

    def coords(self, p) -> Optional[tuple]:
        if len(self.factors) == 2:
            return (p.first, p.second) if isinstance(p, P.Pair) else None
        return p if isinstance(p, tuple) and len(p) == len(self.factors) else None

    def build(self, coords):
        coords = tuple(coords)
        return P.Pair(*coords) if len(self.factors) == 2 else coords

    def contains(self, p) -> bool:
        c = self.coords(p)
        return c is not None and all(f.contains(v) for f, v in zip(self.factors, c))

    def dist(self, p, q) -> BoundedReal:
        parts = [f.dist(a, b) for f, a, b in zip(self.factors, self.coords(p), self.coords(q))]
        total = BoundedReal(0)
        for part in parts:
            total = total + square_of(part)
        return sqrt(total)

    def candidates_global(self, count, rng):
        cols = [[v for v in f.candidates_global(count, rng) if f.contains(v)] for f in self.factors]
        if any(not c for c in cols):
            return []
        return [self.build(rng.choice(c) for c in cols) for _ in range(count)]

    def candidates_near(self, p, radius, count, rng):
        c = self.coords(p)
        cols = []
        for f, v in zip(self.factors, c):
            col = [w for w in f.candidates_near(v, radius, count, rng) if f.contains(w)]
            cols.append(col + [v])
        return [self.build(rng.choice(col) for col in cols) for _ in range(count)]

    def special_points(self):
        specials = [f.special_points()[:5] for f in self.factors]
        return [self.build(c) for c in cartesian(*specials)][:30]

    def _moves(self, y, x, step, method):
        cy, cx = self.coords(y), self.coords(x)
        for i, f in enumerate(self.factors):
            for z in getattr(f, method)(cy[i], cx[i], step):
                yield self.build(cy[:i] + (z,) + cy[i + 1:])

    def toward_candidates(self, y, x, step):
        return self._moves(y, x, step, "toward_candidates")

    def away_candidates(self, y, x, step):
        return self._moves(y, x, step, "away_candidates")

    def isolation_radius(self, p):
        radii = [f.isolation_radius(v) for f, v in zip(self.factors, self.coords(p))]
        if any(r is None for r in radii):
            return None
        return min(radii)

    def _frozen(self, y, eps):
        """Index of the single free factor when every other coordinate of ``y`` is isolated beyond ``eps``."""
        free = []
        for i, (f, v) in enumerate(zip(self.factors, self.coords(y))):
            iso = f.isolation_radius(v)
            if iso is None or eps > iso:
                free.append(i)
        return free

    def certify_not_in_closure(self, x, y, eps, cfg):
        if super().certify_not_in_closure(x, y, eps, cfg):
            return True
        free = self._frozen(y, eps)
        if len(free) != 1:
            return False
        i = free[0]
        xi, yi = self.coords(x)[i], self.coords(y)[i]
        if xi == yi:
            return True  # the free factor's ball of radius 0 is empty
        return self.factors[i].certify_not_in_closure(xi, yi, eps, cfg)

    def certify_interior(self, x, y, eps, cfg):
        if super().certify_interior(x, y, eps, cfg):
            return True
        free = self._frozen(y, eps)
        if len(free) != 1:
            return False
        i = free[0]
        xi, yi = self.coords(x)[i], self.coords(y)[i]
        if xi == yi:
            return False
        return self.factors[i].certify_interior(xi, yi, eps, cfg)


def euclidean_product(factors: Sequence[MetricSpace]) -> MetricSpace:
    """Euclidean combination of finitely many factors."""
    factors = list(factors)
    if not factors:
        raise InvalidParameter("a product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    if all(type(f) is IntervalSpace for f in factors):
        ambient = EuclideanSpace(len(factors))
        unions = [f.union for f in factors]
        if all(u.is_real_line for u in unions):
            return ambient
        return SubspaceSpace(ambient, R.ProductRegion(unions))
    return EuclideanProductSpace(factors)


# the weighted series metric on (truncated) countable products

@dataclass(frozen=True)
class ProductWeights:
    lambdas: Tuple[BoundedReal, ...]
    tail_lambda: Optional[BoundedReal]
    truncation_K: int = 32

    def weight(self, k: int) -> BoundedReal:
        """``lambda_k * 2^k`` for the zero-based coordinate ``k``."""
        lam = self.lambdas[k] if k < len(self.lambdas) else self.tail_lambda
        return lam * Fraction(2 ** (k + 1))


class ProductDSpace(MetricSpace):
    """``D(x, y) = sum_k d_k(x_k, y_k) / (lambda_k 2^k)`` on :class:`Seq` points.

    ``factors`` are the leading coordinates; every later coordinate lives
    in ``tail`` (which must have a finite diameter).  A point's coordinates
    beyond its prefix equal the base point.
    """

    def __init__(self, factors, tail=None, base=None, tail_base=None, truncation_K: int = 32):
        self.factors = tuple(factors)
        self.tail = tail
        if not self.factors and tail is None:
            raise InvalidParameter("a product needs at least one factor")
        if tail is not None and tail.diameter is None:
            raise MissingDiameter("the repeated tail factor must have a finite diameter")
        if truncation_K < max(1, len(self.factors)):
            raise InvalidParameter("truncation must cover every leading factor")
        self.K = truncation_K
        self.base = tuple(base) if base is not None else tuple(self._default_base(f) for f in self.factors)
        if len(self.base) != len(self.factors):
            raise InvalidParameter("one base coordinate per leading factor")
        self.tail_base = tail_base if tail_base is not None or tail is None else self._default_base(tail)
        for f, b in zip(self.factors, self.base):
            f.check(b)
        if tail is not None:
            tail.check(self.tail_base)
        lams = tuple(self._lambda(f) for f in self.factors)
        self.weights = ProductWeights(lams, None if tail is None else self._lambda(tail), truncation_K)
        self.name = "D-product(" + ", ".join(f.name for f in self.factors) + (f", {tail.name}^N)" if tail else ")")
        if all(f.diameter is not None for f in self.factors):
            self.diameter = BoundedReal(1 if tail is not None else 1 - Fraction(1, 2 ** len(self.factors)))
        if all(f.definition is not None for f in self.factors) and (tail is None or tail.definition is not None):
            self.definition = {
                "type": "product_D",
                "factors": [f.definition for f in self.factors],
                "tail": None if tail is None else tail.definition,
                "base": [P.point_to_json(b) for b in self.base],
                "tail_base": None if tail is None else P.point_to_json(self.tail_base),
                "truncation": self.K,
            }

    @staticmethod
    def _default_base(f: MetricSpace):
        specials = f.special_points()
        if specials:
            return specials[0]
        return f.sample_global(1, 0)[0]

    @staticmethod
    def _lambda(f: MetricSpace) -> BoundedReal:
        if f.diameter is None:
            return BoundedReal(1)
        if f.diameter.hi <= 0:
            raise InvalidParameter("factors need at least two points")
        return f.diameter

    def factor(self, k: int) -> MetricSpace:
        if k < len(self.factors):
            return self.factors[k]
        if self.tail is None:
            raise DomainMismatch(f"coordinate {k + 1} beyond a finite product")
        return self.tail

    def base_coord(self, k: int):
        return self.base[k] if k < len(self.base) else self.tail_base

    def coord(self, p, k: int):
        return p.prefix[k] if k < len(p.prefix) else self.base_coord(k)

    def canonical(self, p):
        prefix = list(p.prefix)
        while prefix and prefix[-1] == self.base_coord(len(prefix) - 1):
            prefix.pop()
        return P.Seq(tuple(prefix))

    def point(self, *coords) -> P.Seq:
        return self.canonical(P.Seq(tuple(coords)))

    def contains(self, p) -> bool:
        if not isinstance(p, P.Seq):
            return False
        if self.tail is None and len(p.prefix) > len(self.factors):
            return False
        return all(self.factor(k).contains(c) for k, c in enumerate(p.prefix))

    def _term(self, p, q, k: int) -> BoundedReal:
        a, b = self.coord(p, k), self.coord(q, k)
        if a == b:
            return BoundedReal(0)
        return self.factor(k).dist(a, b) / self.weights.weight(k)

    def dist(self, p, q) -> BoundedReal:
        n = max(len(p.prefix), len(q.prefix))
        head = BoundedReal(0)
        for k in range(min(n, self.K)):
            head = head + self._term(p, q, k)
        if n <= self.K:
            return head

        def bounds(level: int):
            K = self.K + 8 * level
            total = BoundedReal(0)
            for k in range(min(n, K)):
                total = total + self._term(p, q, k)
            lo, hi = total.bounds_at(level)
            return lo, hi + (Fraction(1, 2**K) if n > K else 0)

        lo, hi = bounds(0)
        return BoundedReal(lo, hi, refine=bounds)

    def _with(self, p, k: int, value):
        prefix = list(p.prefix)
        while len(prefix) <= k:
            prefix.append(self.base_coord(len(prefix)))
        prefix[k] = value
        return self.canonical(P.Seq(tuple(prefix)))

    def _max_coord(self) -> int:
        return len(self.factors) if self.tail is None else max(len(self.factors), 4)

    def candidates_global(self, count, rng):
        out = []
        top = self._max_coord()
        for _ in range(count):
            n = rng.randint(1, top)
            coords = []
            for k in range(n):
                f = self.factor(k)
                options = [c for c in f.candidates_global(3, rng) if f.contains(c)] or [self.base_coord(k)]
                coords.append(rng.choice(options))
            out.append(self.canonical(P.Seq(tuple(coords))))
        return out

    def candidates_near(self, p, radius, count, rng):
        out = []
        top = min(self._max_coord(), len(p.prefix) + 1)
        for _ in range(count):
            k = rng.randrange(top)
            f = self.factor(k)
            local = radius * self.weights.weight(k).lo
            options = [c for c in f.candidates_near(self.coord(p, k), local, 3, rng) if f.contains(c)]
            if options:
                out.append(self._with(p, k, rng.choice(options)))
        return out

    def special_points(self):
        out = [self.canonical(P.Seq(()))]
        for k, f in enumerate(self.factors[:3]):
            for c in f.special_points()[:3]:
                z = self._with(P.Seq(()), k, c)
                if z not in out:
                    out.append(z)
        return out

    def _moves(self, y, x, step, method):
        top = min(self._max_coord(), max(len(y.prefix), len(x.prefix)) + 1)
        for k in range(top):
            local = step * self.weights.weight(k).lo
            for z in getattr(self.factor(k), method)(self.coord(y, k), self.coord(x, k), local):
                yield self._with(y, k, z)

    def toward_candidates(self, y, x, step):
        return self._moves(y, x, step, "toward_candidates")

    def away_candidates(self, y, x, step):
        return self._moves(y, x, step, "away_candidates")

    def isolation_radius(self, p):
        if self.tail is not None:
            return None
        radii = []
        for k, f in enumerate(self.factors):
            iso = f.isolation_radius(self.coord(p, k))
            if iso is None:
                return None
            radii.append(iso / self.weights.weight(k).hi)
        return min(radii)


def product_metric_D(factors, weights: Optional[ProductWeights] = None, tail=None, base=None, tail_base=None,
                     truncation_K: int = 32) -> ProductDSpace:
    if weights is not None:
        truncation_K = weights.truncation_K
    space = ProductDSpace(factors, tail, base, tail_base, truncation_K)
    if weights is not None and weights.lambdas != space.weights.lambdas:
        raise InvalidParameter("weights must follow the diameter convention of the factors")
    return space


# metric transforms

@dataclass(frozen=True)
class Transform:
    name: str
    apply: Callable[[BoundedReal], BoundedReal]
    inverse_upper: Callable[[Fraction], Optional[Fraction]]  # rational >= phi^{-1}(eps), or None
    value_lower: Callable[[Fraction], Fraction]  # rational <= phi(t)


def _log1p_lower(t: Fraction) -> Fraction:
    return log1p(t).lo


def _expm1_upper(eps: Fraction) -> Optional[Fraction]:
    # e^eps - 1 <= eps + eps^2 for 0 <= eps <= 1
    return eps + eps * eps if eps <= 1 else None


REGISTRY: Dict[str, Transform] = {
    "t/(1+t)": Transform(
        "t/(1+t)",
        over_one_plus,
        lambda eps: eps / (1 - eps) if eps < 1 else None,
        lambda t: t / (1 + t),
    ),
    "log(1+t)": Transform("log(1+t)", log1p, _expm1_upper, _log1p_lower),
}


class TransformSpace(MetricSpace):
    """Same points, distance ``phi(d)`` for a registered ``phi`` or ``min(d, r)``."""

    def __init__(self, inner: MetricSpace, kind: str, r: Optional[BoundedReal] = None, plateau_pair=None):
        self.inner = inner
        self.kind = kind
        self.r = r
        self.linear = inner.linear
        self.plateau_pair = plateau_pair
        if kind == "min":
            self.phi = None
            self.name = f"min({inner.name}, {r!r})"
            self.diameter = r if inner.diameter is None else minimum(inner.diameter, r)
        else:
            self.phi = REGISTRY[kind]
            self.name = f"{kind} o {inner.name}"
            if inner.diameter is not None:
                self.diameter = self.phi.apply(inner.diameter)
            elif kind == "t/(1+t)":
                self.diameter = BoundedReal(1)
        if inner.definition is not None:
            self.definition = {"type": "transform", "name": kind, "inner": inner.definition}
            if kind == "min":
                self.definition["r"] = P.format_rational(r.value)
                if plateau_pair is not None:
                    self.definition["plateau"] = [P.point_to_json(p) for p in plateau_pair]

    def contains(self, p) -> bool:
        return self.inner.contains(p)

    def canonical(self, p):
        return self.inner.canonical(p)

    def dist(self, p, q) -> BoundedReal:
        d = self.inner.dist(p, q)
        if self.phi is None:
            return minimum(d, self.r)
        return self.phi.apply(d)

    def candidates_global(self, count, rng):
        return self.inner.candidates_global(count, rng)

    def candidates_near(self, p, radius, count, rng):
        inner_radius = radius
        if self.phi is not None:
            inner_radius = self.phi.inverse_upper(radius) or radius * 64
        elif radius >= self.r.lo:
            inner_radius = radius * 64
        return self.inner.candidates_near(p, inner_radius, count, rng)

    def special_points(self):
        out = list(self.inner.special_points())
        if self.plateau_pair:
            out = list(self.plateau_pair) + [p for p in out if p not in self.plateau_pair]
        return out

    # phi(t) <= t for every registered transform, so inner steps are no longer than requested
    def toward_candidates(self, y, x, step):
        return self.inner.toward_candidates(y, x, step)

    def away_candidates(self, y, x, step):
        return self.inner.away_candidates(y, x, step)

    def isolation_radius(self, p):
        iso = self.inner.isolation_radius(p)
        if iso is None:
            return None
        if self.phi is None:
            return min(iso, self.r.lo)
        return self.phi.value_lower(iso)

    def certify_not_in_closure(self, x, y, eps, cfg):
        if super().certify_not_in_closure(x, y, eps, cfg):
            return True
        if self.phi is None:
            d = self.inner.dist(x, y)
            if compare(d, self.r, cfg.precision_cap) is Cmp.GT:
                # B(y, d - r) misses B(x, r) by the triangle inequality
                gap = (d - self.r).refined(cfg.precision_cap).lo
                return eps <= min(gap, self.r.lo)
            return eps <= self.r.lo and self.inner.certify_not_in_closure(x, y, eps, cfg)
        wider = self.phi.inverse_upper(eps)
        return wider is not None and self.inner.certify_not_in_closure(x, y, wider, cfg)

    def certify_interior(self, x, y, eps, cfg):
        if super().certify_interior(x, y, eps, cfg):
            return True
        if self.phi is None:
            d = self.inner.dist(x, y)
            if compare(d, self.r, cfg.precision_cap) in (Cmp.GT, Cmp.EQ):
                return True  # the closed ball of radius r is everything
            return eps <= self.r.lo and self.inner.certify_interior(x, y, eps, cfg)
        wider = self.phi.inverse_upper(eps)
        return wider is not None and self.inner.certify_interior(x, y, wider, cfg)

    def origin(self):
        return self.inner.origin()


def bounded_transform(space: MetricSpace) -> TransformSpace:
    """``d / (1 + d)``."""
    return TransformSpace(space, "t/(1+t)")


def monotone_transform(space: MetricSpace, phi: str) -> TransformSpace:
    if phi not in REGISTRY:
        raise UnknownTransform(phi)
    return TransformSpace(space, phi)


def truncate_transform(space: MetricSpace, r, pair=None) -> TransformSpace:
    """``min(d, r)``; ``pair`` optionally names two points farther apart than ``r``."""
    r = lift(r)
    if not r.is_exact:
        raise InvalidParameter("the truncation level must be rational")
    if r.lo <= 0:
        raise InvalidParameter("the truncation level must be positive")
    if pair is not None:
        a, b = pair
        if compare(space.dist(space.check(a), space.check(b)), r) is not Cmp.GT:
            raise InvalidParameter("the plateau pair must be farther apart than r")
        pair = (a, b)
    return TransformSpace(space, "min", r, pair)


__all__ = [
    "SubspaceSpace", "subspace", "EuclideanProductSpace", "euclidean_product", "ProductWeights",
    "ProductDSpace", "product_metric_D", "TransformSpace", "bounded_transform", "monotone_transform",
    "truncate_transform", "REGISTRY", "DiscreteSpace", "IntervalSpace", "EuclideanSpace",
]
