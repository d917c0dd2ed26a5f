"""Point values and their JSON encoding.

Points are plain immutable values:

* scalar  -- :class:`fractions.Fraction`
* vector  -- ``tuple`` of ``Fraction`` (dimension >= 2)
* label   -- :class:`Label`
* pair    -- :class:`Pair` (one point from each factor of a two-factor product)
* sequence -- :class:`Seq`, a finite prefix; later coordinates equal the
  owning space's base point
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple, Union

from .errors import DomainMismatch
from .numbers import format_rational, parse_rational


@dataclass(frozen=True)
class Label:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Pair:
    first: Any
    second: Any


@dataclass(frozen=True)
class Seq:
    prefix: Tuple[Any, ...]


Point = Union[Fraction, Tuple[Fraction, ...], Label, Pair, Seq]


def is_scalar(p) -> bool:
    return isinstance(p, Fraction)


def is_vector(p) -> bool:
    return isinstance(p, tuple) and len(p) >= 1 and all(isinstance(c, Fraction) for c in p)


def vec(*coords) -> Tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


# linear structure on scalars, vectors and pairs thereof

def add(p, q):
    if is_scalar(p):
        return p + q
    if isinstance(p, tuple):
        return tuple(a + b for a, b in zip(p, q))
    if isinstance(p, Pair):
        return Pair(add(p.first, q.first), add(p.second, q.second))
    raise DomainMismatch(f"no addition on {type(p).__name__} points")


def scale(c: Fraction, p):
    if is_scalar(p):
        return c * p
    if isinstance(p, tuple):
        return tuple(c * a for a in p)
    if isinstance(p, Pair):
        return Pair(scale(c, p.first), scale(c, p.second))
    raise DomainMismatch(f"no scaling on {type(p).__name__} points")


def sub(p, q):
    return add(p, scale(Fraction(-1), q))


def lerp(p, q, s: Fraction):
    """``p + s (q - p)``."""
    return add(p, scale(s, sub(q, p)))


def zero_like(p):
    return scale(Fraction(0), p)


# JSON

def point_to_json(p) -> Any:
    if isinstance(p, Fraction):
        return format_rational(p)
    if isinstance(p, tuple):
        return [format_rational(c) for c in p]
    if isinstance(p, Label):
        return {"label": p.name}
    if isinstance(p, Pair):
        return {"pair": [point_to_json(p.first), point_to_json(p.second)]}
    if isinstance(p, Seq):
        return {"seq": [point_to_json(c) for c in p.prefix]}
    raise TypeError(f"cannot encode point {p!r}")


def point_from_json(obj: Any, path: str = "$"):
    if isinstance(obj, str):
        return _rational(obj, path)
    if isinstance(obj, list):
        if not obj:
            raise ValueError(f"{path}: empty vector")
        return tuple(_rational(c, f"{path}[{i}]") for i, c in enumerate(obj))
    if isinstance(obj, dict) and len(obj) == 1:
        (key, val), = obj.items()
        if key == "label" and isinstance(val, str):
            return Label(val)
        if key == "pair" and isinstance(val, list) and len(val) == 2:
            return Pair(point_from_json(val[0], f"{path}.pair[0]"), point_from_json(val[1], f"{path}.pair[1]"))
        if key == "seq" and isinstance(val, list) and val:
            return Seq(tuple(point_from_json(c, f"{path}.seq[{i}]") for i, c in enumerate(val)))
    raise ValueError(f"{path}: not a point encoding: {obj!r}")


def _rational(obj: Any, path: str) -> Fraction:
    if not isinstance(obj, str):
        raise ValueError(f"{path}: rationals must be 'p/q' strings, got {obj!r}")
    try:
        return parse_rational(obj)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def format_point(p) -> str:
    if isinstance(p, Fraction):
        return format_rational(p)
    if isinstance(p, tuple):
        return "(" + ", ".join(format_rational(c) for c in p) + ")"
    if isinstance(p, Label):
        return p.name
    if isinstance(p, Pair):
        return f"({format_point(p.first)}, {format_point(p.second)})"
    if isinstance(p, Seq):
        return "(" + ", ".join(format_point(c) for c in p.prefix) + ", ...)"
    return repr(p)
