"""Metric spaces: the distance contract shared by every construction."""
from __future__ import annotations

import math
import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, List, Optional

from . import points as P
from .errors import DomainMismatch
from .intervals import IntervalUnion
from .numbers import (
    BoundedReal,
    Cmp,
    RefinementCounter,
    compare,
    format_rational,
    parse_rational,
    sqrt,
)


@dataclass(frozen=True)
class ToleranceConfig:
    sep_eps: Fraction = Fraction(1, 2**20)
    grid_delta: Fraction = Fraction(1, 64)
    budget: int = 500
    precision_cap: int = 8
    seed: int = 0
    samples_per_scale: int = 12

    def __post_init__(self):
        for name in ("sep_eps", "grid_delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.sep_eps <= 0 or self.grid_delta <= 0:
            raise ValueError("sep_eps and grid_delta must be positive")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")

    @property
    def witness_length(self) -> int:
        """Number of shrinking scales in a witness sequence."""
        return max(1, math.ceil(math.log2(1 / self.grid_delta)))

    def to_json(self) -> dict:
        return {
            "sep_eps": format_rational(self.sep_eps),
            "grid_delta": format_rational(self.grid_delta),
            "budget": self.budget,
            "precision_cap": self.precision_cap,
            "seed": self.seed,
            "samples_per_scale": self.samples_per_scale,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ToleranceConfig":
        return cls(
            sep_eps=parse_rational(obj["sep_eps"]),
            grid_delta=parse_rational(obj["grid_delta"]),
            budget=int(obj["budget"]),
            precision_cap=int(obj["precision_cap"]),
            seed=int(obj["seed"]),
            samples_per_scale=int(obj.get("samples_per_scale", 12)),
        )


def rng_for(seed: int, *salt) -> random.Random:
    """Deterministic generator for a seed and a salt path."""
    return random.Random(":".join(str(s) for s in (seed,) + salt))


def derive_seed(seed: int, *parts) -> int:
    """A stable integer seed mixing ``seed`` with printable ``parts``."""
    return zlib.crc32(":".join(str(p) for p in (seed,) + parts).encode())


class MetricSpace:
    """A point domain with a certified distance oracle and samplers.

    Subclasses implement :meth:`contains`, :meth:`dist` and
    :meth:`candidates_near`; everything else has conservative defaults.
    ``certify_*`` methods must only return ``True`` when the claim is proved.
    """

    name = "space"
    linear = False
    diameter: Optional[BoundedReal] = None
    ball_oracle: Optional[Callable[[Any, BoundedReal], Any]] = None
    definition: Optional[dict] = None

    # domain

    def contains(self, p) -> bool:
        raise NotImplementedError

    def check(self, p):
        if not self.contains(p):
            raise DomainMismatch(f"{P.format_point(p)} is not a point of {self.name}")
        return p

    def canonical(self, p):
        return p

    @property
    def exact_domain(self) -> Optional[IntervalUnion]:
        """The interval union when this is the line metric on one; else ``None``."""
        return None

    # distance

    def dist(self, p, q) -> BoundedReal:
        raise NotImplementedError

    # sampling

    def candidates_near(self, p, radius: Fraction, count: int, rng: random.Random) -> list:
        raise NotImplementedError

    def candidates_global(self, count: int, rng: random.Random) -> list:
        raise NotImplementedError

    def sample_global(self, count: int, seed: int) -> list:
        rng = rng_for(seed, "global")
        out = []
        for p in self.candidates_global(4 * count, rng):
            if self.contains(p):
                p = self.canonical(p)
                if p not in out:
                    out.append(p)
            if len(out) == count:
                break
        return out

    def sample_near(self, p, radius, count: int, seed: int, cap: int = 8) -> list:
        """Up to ``count`` domain points strictly within ``radius`` of ``p``."""
        return list(self.iter_near(p, radius, count, seed, cap))

    def iter_near(self, p, radius, count: int, seed: int, cap: int = 8, checked: bool = True):
        """Lazy form of :meth:`sample_near`; ``checked=False`` leaves the distance test to the caller."""
        radius = radius.hi if isinstance(radius, BoundedReal) else Fraction(radius)
        rng = rng_for(seed, "near")
        seen = []
        for z in self.candidates_near(p, radius, 2 * count, rng):
            if not self.contains(z):
                continue
            z = self.canonical(z)
            if z in seen or (checked and compare(self.dist(p, z), radius, cap) is not Cmp.LT):
                continue
            seen.append(z)
            yield z
            if len(seen) == count:
                return

    # whether toward/away candidates are already known to lie in the space
    moves_are_members = False

    def special_points(self) -> list:
        """Boundary-adjacent points where counterexamples tend to live."""
        return []

    # locus hints for witness search

    def toward(self, y, x, step: Fraction):
        """A point near ``y`` displaced by about ``step`` toward ``x``, or ``None``."""
        return None

    def away(self, y, x, step: Fraction):
        """A point near ``y`` displaced by about ``step`` away from ``x``, or ``None``."""
        return None

    def toward_candidates(self, y, x, step: Fraction):
        """Iterable of candidate points about ``step`` from ``y``, nearer to ``x``."""
        z = self.toward(y, x, step)
        return () if z is None else (z,)

    def away_candidates(self, y, x, step: Fraction):
        """Iterable of candidate points about ``step`` from ``y``, farther from ``x``."""
        z = self.away(y, x, step)
        return () if z is None else (z,)

    def isolation_radius(self, p) -> Optional[Fraction]:
        """``rho > 0`` with ``B(p, rho) = {p}`` when ``p`` is certified isolated."""
        return None

    # certificates at a sphere point y, radius r = d(x, y)

    def certify_not_in_closure(self, x, y, eps: Fraction, cfg: ToleranceConfig) -> bool:
        """Proof that ``B(y, eps)`` misses the open ball ``B(x, d(x, y))``."""
        if self.ball_oracle is not None:
            desc = self.ball_oracle(x, self.dist(x, y))
            if desc is not None and desc.certify_not_in_closure(y, eps):
                return True
        iso = self.isolation_radius(y)
        return iso is not None and eps <= iso

    def certify_interior(self, x, y, eps: Fraction, cfg: ToleranceConfig) -> bool:
        """Proof that ``B(y, eps)`` lies inside the closed ball ``B[x, d(x, y)]``."""
        r = self.dist(x, y)
        if self.diameter is not None and compare(r, self.diameter, cfg.precision_cap) in (Cmp.GT, Cmp.EQ):
            return True
        if self.ball_oracle is not None:
            desc = self.ball_oracle(x, r)
            if desc is not None and desc.certify_interior(y, eps):
                return True
        iso = self.isolation_radius(y)
        return iso is not None and eps <= iso

    # linear structure (only meaningful when ``linear``)

    def origin(self):
        raise DomainMismatch(f"{self.name} has no linear structure")

    def to_json(self) -> dict:
        if self.definition is None:
            raise ValueError(f"{self.name} has no serializable definition")
        return self.definition


def eval_distance(space: MetricSpace, p, q) -> BoundedReal:
    space.check(p)
    space.check(q)
    return space.dist(p, q)


# concrete base spaces

class IntervalSpace(MetricSpace):
    """``(X, rho_1)`` for an interval union ``X`` -- distances are exact."""

    def __init__(self, union: IntervalUnion, name: Optional[str] = None):
        if union.is_empty:
            from .errors import EmptyRegion

            raise EmptyRegion("empty interval union")
        self.union = union
        self.name = name or f"({union}, rho1)"
        self.linear = union.is_real_line
        if union.is_bounded:
            self.diameter = BoundedReal(union.sup() - union.inf())
        self.definition = {"type": "interval_union", "intervals": union.to_json()["intervals"]}

    @property
    def exact_domain(self) -> IntervalUnion:
        return self.union

    def contains(self, p) -> bool:
        return isinstance(p, Fraction) and self.union.contains(p)

    def dist(self, p, q) -> BoundedReal:
        return BoundedReal(abs(p - q))

    def candidates_global(self, count, rng):
        return self.union.candidates(rng, count)

    def candidates_near(self, p, radius, count, rng):
        return self.union.candidates(rng, count, p, radius)

    def special_points(self):
        return self.union.special_points()

    def _step(self, y, direction, step):
        z = y + direction * step
        return z if self.union.contains(z) else None

    def toward(self, y, x, step):
        if x == y:
            return None
        return self._step(y, 1 if x > y else -1, min(step, abs(x - y) / 2))

    def away(self, y, x, step):
        return self._step(y, 1 if y >= x else -1, step)

    def isolation_radius(self, p):
        return self.union.isolation_radius(p)

    def certify_not_in_closure(self, x, y, eps, cfg):
        r = abs(x - y)
        gap = self.union.open_ball(x, r).distance_to(y)
        return gap is None or eps <= gap

    def certify_interior(self, x, y, eps, cfg):
        r = abs(x - y)
        gap = self.union.outside_closed_ball(x, r).distance_to(y)
        return gap is None or eps <= gap

    def origin(self):
        return Fraction(0)


class DiscreteSpace(MetricSpace):
    """Finitely many labels, distance 1 between distinct ones."""

    def __init__(self, labels):
        self.labels = tuple(P.Label(str(lab)) if not isinstance(lab, P.Label) else lab for lab in labels)
        if not self.labels:
            from .errors import EmptyRegion

            raise EmptyRegion("no labels")
        self.name = "discrete{" + ",".join(lab.name for lab in self.labels) + "}"
        self.diameter = BoundedReal(1 if len(self.labels) > 1 else 0)
        self.definition = {"type": "discrete", "labels": [lab.name for lab in self.labels]}

    def contains(self, p) -> bool:
        return isinstance(p, P.Label) and p in self.labels

    def dist(self, p, q) -> BoundedReal:
        return BoundedReal(0 if p == q else 1)

    def candidates_global(self, count, rng):
        return [rng.choice(self.labels) for _ in range(count)]

    def candidates_near(self, p, radius, count, rng):
        return list(self.labels) if radius > 1 else [p]

    def special_points(self):
        return list(self.labels)

    def isolation_radius(self, p):
        return Fraction(1)


class EuclideanSpace(MetricSpace):
    """``(R^n, rho_n)`` on rational vectors, ``n >= 2``."""

    linear = True
    moves_are_members = True

    def __init__(self, dim: int):
        if dim < 2:
            raise ValueError("use IntervalSpace(IntervalUnion.real_line()) for the line")
        self.dim = dim
        self.name = f"(R^{dim}, rho{dim})"
        from .regions import FullSpace

        self.region = FullSpace(dim)
        self.definition = (
            {"type": "region2d", "region": self.region.to_json()} if dim == 2 else {"type": "euclidean", "dim": dim}
        )

    def contains(self, p) -> bool:
        return isinstance(p, tuple) and len(p) == self.dim and all(isinstance(c, Fraction) for c in p)

    def dist(self, p, q) -> BoundedReal:
        return sqrt(sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0)))

    def candidates_global(self, count, rng):
        return self.region.candidates(rng, count)

    def candidates_near(self, p, radius, count, rng):
        return self.region.candidates(rng, count, p, radius)

    def special_points(self):
        return self.region.special_points()

    def toward(self, y, x, step):
        return euclid_step(y, x, step, toward=True)

    def away(self, y, x, step):
        return euclid_step(y, x, step, toward=False)

    def toward_candidates(self, y, x, step):
        return euclid_moves(y, x, step, toward=True)

    def away_candidates(self, y, x, step):
        return euclid_moves(y, x, step, toward=False)

    def origin(self):
        return tuple(Fraction(0) for _ in range(self.dim))


def euclid_step(y, x, step: Fraction, toward: bool):
    """``y`` moved by roughly ``step`` along the line through ``x`` and ``y``."""
    if x == y:
        if toward:
            return None
        return (y[0] + step,) + tuple(y[1:])
    norm_sq = sum(((a - b) ** 2 for a, b in zip(x, y)), Fraction(0))
    norm = _approx_sqrt(norm_sq)
    t = step / norm
    if toward:
        t = min(t, Fraction(1, 2))
        return tuple(b + t * (a - b) for a, b in zip(x, y))
    return tuple(b + t * (b - a) for a, b in zip(x, y))


def euclid_moves(y, x, step: Fraction, toward: bool):
    """Radial step, then in the plane sideways steps bent toward or tangent to the sphere.

    A tangent step always leaves the closed ball; bending it inward by the
    same amount keeps it inside when ``step`` is small.  Subspaces filter
    these by membership, so the sideways ones matter near boundaries.
    Yields lazily since the radial step usually suffices.
    """
    z = euclid_step(y, x, step, toward)
    if z is not None:
        yield z
    if len(y) != 2 or x == y:
        return
    u = (y[0] - x[0], y[1] - x[1])  # from x to y
    norm = _approx_sqrt(u[0] * u[0] + u[1] * u[1])
    k = step / norm
    for sign in (1, -1):
        side = (y[0] - sign * k * u[1], y[1] + sign * k * u[0])
        if toward:
            side = (side[0] - k * u[0], side[1] - k * u[1])
        yield side


def _approx_sqrt(value: Fraction) -> Fraction:
    """A short rational close to ``sqrt(value)``; not a bound."""
    root = math.sqrt(value)
    if root >= 1:
        return Fraction(round(root * 1024), 1024)
    return Fraction(root).limit_denominator(1 << 20) or Fraction(1, 1 << 20)


# axiom fuzzing

@dataclass
class AxiomViolation:
    axiom: str
    points: tuple
    detail: str


@dataclass
class AxiomReport:
    verdict: str  # "pass-at-budget" or "violated"
    triples: int
    violations: List[AxiomViolation] = field(default_factory=list)
    unknown: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass-at-budget"


def verify_metric_axioms(space: MetricSpace, cfg: Optional[ToleranceConfig] = None) -> AxiomReport:
    """Fuzz symmetry, non-negativity, identity and the triangle inequality."""
    cfg = cfg or ToleranceConfig()
    cap = cfg.precision_cap
    counter = RefinementCounter()
    pool = list(space.special_points())[:16]
    pool += space.sample_global(max(8, min(cfg.budget, 64)), cfg.seed)
    pool = [p for p in pool if space.contains(p)]
    rng = rng_for(cfg.seed, "axioms")
    violations: List[AxiomViolation] = []
    unknown = 0

    def flag(axiom, pts, detail):
        violations.append(AxiomViolation(axiom, pts, detail))

    for _ in range(cfg.budget):
        x, y, z = (rng.choice(pool) for _ in range(3))
        dxx, dxy, dyx = space.dist(x, x), space.dist(x, y), space.dist(y, x)
        dyz, dxz = space.dist(y, z), space.dist(x, z)
        if dxx.hi != 0 and compare(dxx, 0, cap, counter) is not Cmp.EQ:
            flag("identity", (x,), f"d(x,x) in [{dxx.lo}, {dxx.hi}]")
        if x != y and dxy.hi == 0:
            flag("identity", (x, y), "d(x,y) = 0 for distinct points")
        for d, pts in ((dxy, (x, y)), (dyz, (y, z)), (dxz, (x, z))):
            if d.hi < 0:
                flag("non-negativity", pts, f"distance bounded above by {d.hi}")
        sym = compare(dxy, dyx, cap, counter)
        if sym in (Cmp.LT, Cmp.GT):
            flag("symmetry", (x, y), f"d(x,y)={dxy!r} vs d(y,x)={dyx!r}")
        tri = compare(dxz, dxy + dyz, cap, counter)
        if tri is Cmp.GT:
            flag("triangle", (x, y, z), f"d(x,z)={dxz!r} exceeds d(x,y)+d(y,z)")
        elif tri is Cmp.UNKNOWN:
            unknown += 1
    return AxiomReport("violated" if violations else "pass-at-budget", cfg.budget, violations, unknown)
