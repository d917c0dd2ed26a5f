"""Rational bounds for real numbers and a three-valued comparator.

Every distance in the toolkit is a :class:`BoundedReal`: a pair of rational
bounds that can be tightened on demand.  Strict inequalities are only ever
certified from disjoint bounds (or from exact rational squares), never from
floating point.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

import mpmath

Rational = Union[Fraction, int]
Bounds = Tuple[Fraction, Fraction]


class Cmp(enum.Enum):
    LT = "less"
    GT = "greater"
    EQ = "equal"
    UNKNOWN = "unknown"

    @property
    def decided(self) -> bool:
        return self is not Cmp.UNKNOWN


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal and float spellings are rejected."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational of the form p/q: {text!r}") from exc


def format_rational(value: Rational) -> str:
    return str(Fraction(value))


class BoundedReal:
    """A real number known to lie in ``[lo, hi]``.

    ``square`` optionally carries the exact rational square of a
    nonnegative value (Euclidean distances); comparisons then go through
    the squares and stay exact.  ``monotone`` records ``(tag, inner)`` when
    the value is a registered strictly increasing function of ``inner``, so
    two values with the same tag compare through their arguments.
    """

    __slots__ = ("lo", "hi", "square", "monotone", "_refine")

    def __init__(
        self,
        lo: Rational,
        hi: Optional[Rational] = None,
        *,
        square: Optional[Fraction] = None,
        monotone: Optional[Tuple[str, "BoundedReal"]] = None,
        refine: Optional[Callable[[int], Bounds]] = None,
    ):
        lo = as_fraction(lo)
        hi = lo if hi is None else as_fraction(hi)
        if lo > hi:
            raise ValueError(f"empty bounds [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.square = square
        self.monotone = monotone
        self._refine = None if lo == hi else refine

    @classmethod
    def exact(cls, value: Rational) -> "BoundedReal":
        return cls(value)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("value requested from a non-exact bound")
        return self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refined(self, level: int) -> "BoundedReal":
        """Bounds at refinement ``level``; never looser than the current ones."""
        if self._refine is None:
            return self
        lo, hi = self._refine(level)
        return BoundedReal(
            max(self.lo, lo),
            min(self.hi, hi),
            square=self.square,
            monotone=self.monotone,
            refine=self._refine,
        )

    def bounds_at(self, level: int) -> Bounds:
        r = self.refined(level)
        return r.lo, r.hi

    def contains(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def __float__(self) -> float:
        return float(self.midpoint())

    def __repr__(self) -> str:
        if self.is_exact:
            return f"BoundedReal({self.lo})"
        return f"BoundedReal([{self.lo}, {self.hi}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundedReal):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    # interval arithmetic; each result knows how to rebuild itself finer

    def __add__(self, other) -> "BoundedReal":
        other = lift(other)
        if other.is_exact and other.lo == 0:
            return self
        if self.is_exact and self.lo == 0:
            return other
        if self.is_exact and other.is_exact:
            return BoundedReal(self.lo + other.lo)
        return _combine(self, other, lambda a, b: (a[0] + b[0], a[1] + b[1]))

    __radd__ = __add__

    def __neg__(self) -> "BoundedReal":
        if self.is_exact:
            return BoundedReal(-self.lo)
        return _unary(self, lambda a: (-a[1], -a[0]))

    def __sub__(self, other) -> "BoundedReal":
        return self + (-lift(other))

    def __rsub__(self, other) -> "BoundedReal":
        return lift(other) + (-self)

    def __mul__(self, other) -> "BoundedReal":
        other = lift(other)
        if self.is_exact and other.is_exact:
            return BoundedReal(self.lo * other.lo)
        if other.is_exact and other.lo >= 0 and self.square is not None:
            return _scaled_root(self, other.lo)
        if self.is_exact and self.lo >= 0 and other.square is not None:
            return _scaled_root(other, self.lo)
        return _combine(self, other, _mul_bounds)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BoundedReal":
        other = lift(other)
        if other.is_exact:
            if other.lo == 0:
                raise ZeroDivisionError("division by exact zero")
            return self * BoundedReal(1 / other.lo)
        return self * reciprocal(other)

    def __rtruediv__(self, other) -> "BoundedReal":
        return lift(other) / self


def lift(value) -> BoundedReal:
    if isinstance(value, BoundedReal):
        return value
    return BoundedReal(as_fraction(value))


def _mul_bounds(a: Bounds, b: Bounds) -> Bounds:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def _combine(a: BoundedReal, b: BoundedReal, op: Callable[[Bounds, Bounds], Bounds]) -> BoundedReal:
    lo, hi = op((a.lo, a.hi), (b.lo, b.hi))
    return BoundedReal(lo, hi, refine=lambda k: op(a.bounds_at(k), b.bounds_at(k)))


def _unary(a: BoundedReal, op: Callable[[Bounds], Bounds], **extra) -> BoundedReal:
    lo, hi = op((a.lo, a.hi))
    return BoundedReal(lo, hi, refine=lambda k: op(a.bounds_at(k)), **extra)


def _scaled_root(root: BoundedReal, factor: Fraction) -> BoundedReal:
    # factor * sqrt(S) == sqrt(factor^2 * S), so the square stays exact
    return sqrt(root.square * factor * factor)


def reciprocal(a: BoundedReal) -> BoundedReal:
    if a.lo <= 0 <= a.hi:
        a = a.refined(8)
        if a.lo <= 0 <= a.hi:
            raise ZeroDivisionError("reciprocal of a bound straddling zero")
    if a.is_exact:
        return BoundedReal(1 / a.lo)

    def op(b: Bounds) -> Bounds:
        if b[0] <= 0 <= b[1]:
            return 1 / a.hi, 1 / a.lo
        return 1 / b[1], 1 / b[0]

    return _unary(a, op)


# square roots

_BASE_BITS = 40
_BITS_PER_LEVEL = 24


def _sqrt_bounds(value: Fraction, bits: int) -> Bounds:
    if value <= 0:
        return Fraction(0), Fraction(0)
    num, den = value.numerator, value.denominator
    scale = 1 << bits
    # sqrt(n/d) = sqrt(n*d)/d
    root = math.isqrt(num * den * scale * scale)
    lo = Fraction(root, den * scale)
    hi = lo if root * root == num * den * scale * scale else Fraction(root + 1, den * scale)
    return lo, hi


def _exact_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    rn, rd = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def sqrt(value) -> BoundedReal:
    """Square root with exact rational square when the argument is exact."""
    if isinstance(value, BoundedReal):
        if value.is_exact:
            return sqrt(value.lo)
        if value.hi < 0:
            raise ValueError("square root of a negative bound")

        def op(b: Bounds, level: int) -> Bounds:
            bits = _BASE_BITS + _BITS_PER_LEVEL * level
            return _sqrt_bounds(max(b[0], Fraction(0)), bits)[0], _sqrt_bounds(max(b[1], Fraction(0)), bits)[1]

        lo, hi = op((value.lo, value.hi), 0)
        return BoundedReal(lo, hi, refine=lambda k: op(value.bounds_at(k), k))

    value = as_fraction(value)
    if value < 0:
        raise ValueError("square root of a negative number")
    root = _exact_sqrt(value)
    if root is not None:
        return BoundedReal(root, square=value)
    lo, hi = _sqrt_bounds(value, _BASE_BITS)
    return BoundedReal(
        lo, hi, square=value, refine=lambda k: _sqrt_bounds(value, _BASE_BITS + _BITS_PER_LEVEL * k)
    )


def square_of(a: BoundedReal) -> BoundedReal:
    """The square of a nonnegative bound (exact when ``a.square`` is known)."""
    if a.square is not None:
        return BoundedReal(a.square)
    if a.is_exact:
        return BoundedReal(a.lo * a.lo)

    def op(b: Bounds) -> Bounds:
        lo = max(b[0], Fraction(0))
        return lo * lo, b[1] * b[1]

    return _unary(a, op)


# log(1 + t) via mpmath interval arithmetic

def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    man = -int(man) if sign else int(man)
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


def _log1p_bounds(b: Bounds, level: int) -> Bounds:
    ctx = mpmath.iv
    saved = ctx.prec
    try:
        ctx.prec = 64 + 32 * level
        lo_arg = ctx.mpf([b[0].numerator, b[0].numerator]) / b[0].denominator
        hi_arg = ctx.mpf([b[1].numerator, b[1].numerator]) / b[1].denominator
        lo = ctx.log(1 + lo_arg)
        hi = ctx.log(1 + hi_arg)
        return _raw_to_fraction(lo._mpi_[0]), _raw_to_fraction(hi._mpi_[1])
    finally:
        ctx.prec = saved


def log1p(value) -> BoundedReal:
    value = lift(value)
    if value.lo < 0:
        raise ValueError("log(1+t) is registered for t >= 0 only")
    if value.is_exact and value.lo == 0:
        return BoundedReal(0)
    lo, hi = _log1p_bounds((value.lo, value.hi), 0)
    return BoundedReal(
        lo, hi, monotone=("log1p", value), refine=lambda k: _log1p_bounds(value.bounds_at(k), k)
    )


def over_one_plus(value) -> BoundedReal:
    """``t / (1 + t)``, tagged as a strictly increasing function of ``t``."""
    value = lift(value)
    if value.is_exact:
        t = value.lo
        return BoundedReal(t / (1 + t))

    def op(b: Bounds) -> Bounds:
        return b[0] / (1 + b[0]), b[1] / (1 + b[1])

    return _unary(value, op, monotone=("t/(1+t)", value))


def minimum(a: BoundedReal, b: BoundedReal, cap: int = 8) -> BoundedReal:
    order = compare(a, b, cap)
    if order in (Cmp.LT, Cmp.EQ):
        return a
    if order is Cmp.GT:
        return b
    return _combine(a, b, lambda x, y: (min(x[0], y[0]), min(x[1], y[1])))


def maximum(a: BoundedReal, b: BoundedReal, cap: int = 8) -> BoundedReal:
    order = compare(a, b, cap)
    if order in (Cmp.GT, Cmp.EQ):
        return a
    if order is Cmp.LT:
        return b
    return _combine(a, b, lambda x, y: (max(x[0], y[0]), max(x[1], y[1])))


# comparison

class RefinementCounter:
    """Mutable tally of refinement rounds, owned by a single check invocation."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def _compare_squares(a: BoundedReal, b: BoundedReal) -> Optional[Cmp]:
    sa = a.square if a.square is not None else (a.lo * a.lo if a.is_exact and a.lo >= 0 else None)
    sb = b.square if b.square is not None else (b.lo * b.lo if b.is_exact and b.lo >= 0 else None)
    if sa is None or sb is None or (a.square is None and b.square is None):
        return None
    if sa < sb:
        return Cmp.LT
    if sa > sb:
        return Cmp.GT
    return Cmp.EQ


def compare(a, b, cap: int = 8, counter: Optional[RefinementCounter] = None) -> Cmp:
    """Three-valued order of ``a`` and ``b``, refining up to ``cap`` rounds."""
    a, b = lift(a), lift(b)
    if a is b:
        return Cmp.EQ
    by_squares = _compare_squares(a, b)
    if by_squares is not None:
        return by_squares
    if a.monotone is not None and b.monotone is not None and a.monotone[0] == b.monotone[0]:
        inner = compare(a.monotone[1], b.monotone[1], cap, counter)
        if inner.decided:
            return inner
    for level in range(cap + 1):
        if level:
            a, b = a.refined(level), b.refined(level)
            if counter is not None:
                counter.count += 1
        if a.hi < b.lo:
            return Cmp.LT
        if a.lo > b.hi:
            return Cmp.GT
        if a.is_exact and b.is_exact:
            return Cmp.EQ
    return Cmp.UNKNOWN


def certainly_less(a, b, cap: int = 8, counter: Optional[RefinementCounter] = None) -> bool:
    return compare(a, b, cap, counter) is Cmp.LT


def certainly_greater(a, b, cap: int = 8, counter: Optional[RefinementCounter] = None) -> bool:
    return compare(a, b, cap, counter) is Cmp.GT


def rational_sqrt_upper(value: Fraction, bits: int = _BASE_BITS) -> Fraction:
    return _sqrt_bounds(value, bits)[1]


def rational_sqrt_lower(value: Fraction, bits: int = _BASE_BITS) -> Fraction:
    return _sqrt_bounds(value, bits)[0]
