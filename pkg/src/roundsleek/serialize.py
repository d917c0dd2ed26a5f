"""JSON encoding of space definitions, witnesses and check reports.

Every rational is written as a ``"p/q"`` string and every uncertain real as
a ``[lo, hi]`` pair of such strings, so a report read back on another
machine replays the same exact comparisons.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from . import points as P
from .errors import RoundSleekError, SpaceDefinitionError
from .numbers import BoundedReal, format_rational, parse_rational
from .intervals import IntervalUnion
from .regions import interval_union_from_json, region_from_json
from .space import DiscreteSpace, EuclideanSpace, IntervalSpace, MetricSpace

SCHEMA = 1

SPACE_TYPES = (
    "interval_union", "region2d", "euclidean", "subspace", "product_euclid",
    "product_D", "transform", "gallery", "discrete",
)


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# reals

def real_to_json(value) -> Any:
    if isinstance(value, BoundedReal):
        if value.is_exact:
            return format_rational(value.lo)
        return [format_rational(value.lo), format_rational(value.hi)]
    return format_rational(Fraction(value))


def real_from_json(obj: Any, path: str = "$") -> BoundedReal:
    try:
        if isinstance(obj, str):
            return BoundedReal(parse_rational(obj))
        if isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, str) for v in obj):
            return BoundedReal(parse_rational(obj[0]), parse_rational(obj[1]))
    except ValueError as exc:
        raise SpaceDefinitionError(path, str(exc)) from None
    raise SpaceDefinitionError(path, f"expected 'p/q' or ['lo', 'hi'], got {obj!r}")


def _point(obj: Any, path: str):
    try:
        return P.point_from_json(obj, path)
    except ValueError as exc:
        raise SpaceDefinitionError(path, str(exc).split(": ", 1)[-1]) from None


# spaces

def space_to_json(space: MetricSpace) -> dict:
    if space.definition is None:
        raise ValueError(f"{space.name} has no serializable definition")
    out = dict(space.definition)
    out["schema"] = SCHEMA
    return out


def space_from_json(obj: Any, path: str = "$") -> MetricSpace:
    """Build a space from its definition; errors name the offending JSON path."""
    if not isinstance(obj, dict):
        raise SpaceDefinitionError(path, "space definition must be an object")
    if "schema" in obj and obj["schema"] != SCHEMA:
        raise SpaceDefinitionError(f"{path}.schema", f"unsupported schema {obj['schema']!r}")
    kind = obj.get("type")
    if kind not in SPACE_TYPES:
        raise SpaceDefinitionError(f"{path}.type", f"unknown space type {kind!r}")
    try:
        return _build(kind, obj, path)
    except SpaceDefinitionError:
        raise
    except KeyError as exc:
        name = exc.args[0] if exc.args else "?"
        if isinstance(exc, RoundSleekError):
            raise SpaceDefinitionError(path, str(name)) from None
        raise SpaceDefinitionError(path, f"missing field {name!r}") from None
    except (RoundSleekError, ValueError, TypeError) as exc:
        raise SpaceDefinitionError(path, str(exc)) from None


def _build(kind: str, obj: dict, path: str) -> MetricSpace:
    from . import constructions as C

    if kind == "interval_union":
        return IntervalSpace(interval_union_from_json(obj["intervals"], f"{path}.intervals"))
    if kind == "region2d":
        region = region_from_json(obj["region"], f"{path}.region")
        return C.subspace(EuclideanSpace(2), region)
    if kind == "euclidean":
        dim = obj["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise SpaceDefinitionError(f"{path}.dim", "dimension must be a positive integer")
        if dim == 1:
            return IntervalSpace(IntervalUnion.real_line())
        return EuclideanSpace(dim)
    if kind == "subspace":
        ambient = space_from_json(obj["ambient"], f"{path}.ambient")
        return C.subspace(ambient, region_from_json(obj["region"], f"{path}.region"))
    if kind == "product_euclid":
        return C.euclidean_product(_factors(obj["factors"], f"{path}.factors"))
    if kind == "product_D":
        factors = _factors(obj["factors"], f"{path}.factors")
        tail = None if obj.get("tail") is None else space_from_json(obj["tail"], f"{path}.tail")
        base = obj.get("base")
        if base is not None:
            base = [_point(b, f"{path}.base[{i}]") for i, b in enumerate(base)]
        tail_base = None if obj.get("tail_base") is None else _point(obj["tail_base"], f"{path}.tail_base")
        K = obj.get("truncation", 32)
        if not isinstance(K, int):
            raise SpaceDefinitionError(f"{path}.truncation", "truncation must be an integer")
        return C.product_metric_D(factors, tail=tail, base=base, tail_base=tail_base, truncation_K=K)
    if kind == "transform":
        inner = space_from_json(obj["inner"], f"{path}.inner")
        name = obj["name"]
        if name == "min":
            r = real_from_json(obj["r"], f"{path}.r")
            pair = obj.get("plateau")
            if pair is not None:
                pair = tuple(_point(q, f"{path}.plateau[{i}]") for i, q in enumerate(pair))
            return C.truncate_transform(inner, r, pair)
        return C.monotone_transform(inner, name)
    if kind == "gallery":
        from .gallery import gallery_space

        return gallery_space(obj["name"]).space
    labels = obj["labels"]
    if not isinstance(labels, list) or not all(isinstance(lab, str) for lab in labels):
        raise SpaceDefinitionError(f"{path}.labels", "labels must be a list of strings")
    return DiscreteSpace(labels)


def _factors(items: Any, path: str) -> list:
    if not isinstance(items, list) or not items:
        raise SpaceDefinitionError(path, "expected a nonempty list of space definitions")
    return [space_from_json(f, f"{path}[{i}]") for i, f in enumerate(items)]


def load_space(text: str, path: str = "$") -> MetricSpace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceDefinitionError(path, f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    return space_from_json(obj, path)


# witnesses and reports

def witness_to_json(witness) -> Optional[dict]:
    if witness is None:
        return None
    return {
        "kind": witness.kind.value,
        "points": {name: P.point_to_json(p) for name, p in sorted(witness.points.items())},
        "value": real_to_json(witness.value),
        "separation": None if witness.separation is None else real_to_json(witness.separation),
        "note": witness.note,
    }


def witness_from_json(obj: dict, path: str = "$.witness"):
    from .checkers import WitnessKind, WitnessRecord

    try:
        kind = WitnessKind(obj["kind"])
    except (KeyError, ValueError):
        raise SpaceDefinitionError(f"{path}.kind", f"unknown witness kind {obj.get('kind')!r}") from None
    pts = {name: _point(p, f"{path}.points.{name}") for name, p in obj.get("points", {}).items()}
    value = real_from_json(obj["value"], f"{path}.value")
    sep = obj.get("separation")
    sep = None if sep is None else real_from_json(sep, f"{path}.separation")
    return WitnessRecord(kind, pts, value, sep, obj.get("note", ""))


def effort_to_json(effort) -> dict:
    return {"pairs": effort.pairs, "samples": effort.samples, "refinements": effort.refinements,
            "unknown": effort.unknown}


def _jsonable(val: Any) -> Any:
    if val is None or isinstance(val, (bool, int, str)):
        return val
    if isinstance(val, (Fraction, BoundedReal)):
        return real_to_json(val)
    if hasattr(val, "value") and hasattr(val, "name"):  # enums
        return val.value
    if isinstance(val, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): _jsonable(v) for k, v in val.items()}
    if isinstance(val, (list, tuple)):
        return [_jsonable(v) for v in val]
    try:
        return P.point_to_json(val)
    except TypeError:
        return str(val)


def details_to_json(details: dict) -> dict:
    return _jsonable(details)
