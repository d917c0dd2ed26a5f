"""Brute-force grid oracle for roundness and sleekness of ``rho_1`` on interval unions.

The union is probed on the grid ``k * resolution`` over its span, plus its
endpoints; every open stretch between consecutive probes is classified by
its midpoint.  A probe ``y`` breaks roundness when some point of X lies on
one side of it while no point of X lies within ``resolution`` on that side
(so ``y`` is not a limit of the smaller open ball); it breaks sleekness when
X has points on one side but none within ``resolution`` on the *other* side
(so ``y`` is not a limit of the exterior of the closed ball).

This is the definition evaluated at grid resolution; it knows nothing of
component types.  It is exact whenever every component and every gap is
longer than the resolution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .intervals import IntervalUnion

RESOLUTION = Fraction(1, 10**4)
_LIMIT = 1 << 62


@dataclass(frozen=True)
class GridVerdict:
    round: bool
    sleek: bool
    probes: int
    round_breaker: Optional[Fraction] = None
    sleek_breaker: Optional[Fraction] = None


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def grid_oracle(union: IntervalUnion, resolution: Fraction = RESOLUTION) -> GridVerdict:
    ends = union.endpoints()
    if not ends:
        ends = [Fraction(0)]
    steps = Fraction(1) / resolution
    if steps.denominator != 1:
        raise ValueError("resolution must be 1/N")
    steps = steps.numerator
    den = _lcm([e.denominator for e in ends])
    scale = steps * den  # probe k*resolution maps to k*den
    lo_w = math.floor(min(ends)) - 1
    hi_w = math.ceil(max(ends)) + 1
    if max(abs(lo_w), abs(hi_w)) * scale >= _LIMIT:
        raise OverflowError("interval union too fine for the 64-bit grid")

    grid = np.arange(lo_w * steps, hi_w * steps + 1, dtype=np.int64) * den
    scaled_ends = np.array([int(e * scale) for e in ends], dtype=np.int64)
    samples = np.unique(np.concatenate((grid, scaled_ends)))

    comps = union.intervals
    lo = np.array([0 if iv.lo is None else int(iv.lo * scale) for iv in comps], dtype=np.int64)
    hi = np.array([0 if iv.hi is None else int(iv.hi * scale) for iv in comps], dtype=np.int64)
    lo_closed = np.array([iv.lo_closed for iv in comps], dtype=np.bool_)
    hi_closed = np.array([iv.hi_closed for iv in comps], dtype=np.bool_)
    lo_inf = np.array([iv.lo is None for iv in comps], dtype=np.bool_)
    hi_inf = np.array([iv.hi is None for iv in comps], dtype=np.bool_)

    # doubled coordinates keep the midpoints integral
    doubled = samples * 2
    mids = doubled[:-1] + (samples[1:] - samples[:-1])
    in_x = _kernels.members(doubled, lo * 2, hi * 2, lo_closed, hi_closed, lo_inf, hi_inf)
    gap_in_x = _kernels.members(mids, lo * 2, hi * 2, lo_closed, hi_closed, lo_inf, hi_inf)

    delta = den
    near_left, near_right, any_left, any_right = _kernels.scan(samples, in_x, gap_in_x, delta)
    lo_s, hi_s = lo_w * scale, hi_w * scale
    tested = in_x & (samples - delta >= lo_s) & (samples + delta <= hi_s)
    round_bad = tested & ((~near_left & any_left) | (~near_right & any_right))
    sleek_bad = tested & ((~near_right & any_left) | (~near_left & any_right))

    def breaker(mask):
        hits = np.flatnonzero(mask)
        return Fraction(int(samples[hits[0]]), scale) if hits.size else None

    return GridVerdict(
        round=not round_bad.any(),
        sleek=not sleek_bad.any(),
        probes=int(samples.size),
        round_breaker=breaker(round_bad),
        sleek_breaker=breaker(sleek_bad),
    )
