import json
from fractions import Fraction as F

import pytest

from roundsleek import (
    BoundedReal,
    EuclideanSpace,
    SpaceDefinitionError,
    ToleranceConfig,
    bounded_transform,
    check_round,
    check_sleek,
    gallery_space,
    truncate_transform,
)
from roundsleek import serialize as S
from roundsleek.gallery import NAMES

DEFINITIONS = [
    {"type": "interval_union", "intervals": [
        {"lo": "0", "hi": "1", "lo_closed": True, "hi_closed": True},
        {"lo": "2", "hi": "3", "lo_closed": False, "hi_closed": True}]},
    {"type": "region2d", "region": {"kind": "disk", "center": ["0", "0"], "radius": "1", "closed": True}},
    {"type": "euclidean", "dim": 3},
    {"type": "product_euclid", "factors": [{"type": "discrete", "labels": ["u", "v"]}, {"type": "euclidean", "dim": 1}]},
    {"type": "transform", "name": "min", "r": "1", "inner": {"type": "euclidean", "dim": 2}},
    {"type": "transform", "name": "log(1+t)", "inner": {"type": "euclidean", "dim": 2}},
    {"type": "gallery", "name": "quadrant"},
    {"type": "product_D", "factors": [{"type": "interval_union", "intervals": [
        {"lo": "0", "hi": "0"}, {"lo": "1", "hi": "1"}]}],
     "tail": {"type": "transform", "name": "t/(1+t)", "inner": {"type": "euclidean", "dim": 1}},
     "base": ["0"], "tail_base": "0", "truncation": 16},
]


@pytest.mark.parametrize("definition", DEFINITIONS, ids=lambda d: d["type"])
def test_definitions_round_trip(definition):
    space = S.space_from_json(definition)
    once = S.space_to_json(space)
    again = S.space_to_json(S.space_from_json(once))
    assert once == again
    assert once["schema"] == S.SCHEMA


def test_built_spaces_round_trip():
    for space in (EuclideanSpace(2), bounded_transform(EuclideanSpace(2)), truncate_transform(EuclideanSpace(2), 1)):
        once = S.space_to_json(space)
        assert S.space_to_json(S.space_from_json(once)) == once


@pytest.mark.parametrize("name", NAMES)
def test_every_gallery_entry_serializes(name):
    space = gallery_space(name).space
    assert S.space_to_json(S.space_from_json(S.space_to_json(space))) == S.space_to_json(space)


def test_rationals_are_strings_never_floats():
    text = S.dumps(S.space_to_json(S.space_from_json(DEFINITIONS[0])))
    assert "." not in text.replace("interval_union", "")
    assert S.real_to_json(BoundedReal(F(1, 3))) == "1/3"
    assert S.real_to_json(BoundedReal(F(1, 3), F(1, 2))) == ["1/3", "1/2"]
    assert S.real_from_json(["1/3", "1/2"]) == BoundedReal(F(1, 3), F(1, 2))


@pytest.mark.parametrize("bad,path", [
    ({"type": "nope"}, "$.type"),
    ({"type": "interval_union", "intervals": [{"lo": 0.5, "hi": "1"}]}, "$.intervals[0].lo"),
    ({"type": "region2d", "region": {"kind": "disk", "center": ["0"], "radius": "x"}}, "$.region.radius"),
    ({"type": "product_euclid", "factors": [{"type": "euclidean", "dim": 0}]}, "$.factors[0].dim"),
    ({"type": "transform", "name": "sin", "inner": {"type": "euclidean", "dim": 2}}, "$"),
    ({"type": "gallery", "name": "nope"}, "$"),
    ({"type": "euclidean", "dim": 2, "schema": 9}, "$.schema"),
    ([1, 2], "$"),
])
def test_errors_name_the_json_path(bad, path):
    with pytest.raises(SpaceDefinitionError) as info:
        S.space_from_json(bad)
    assert str(info.value).startswith(path + ":")


def test_invalid_json_text():
    with pytest.raises(SpaceDefinitionError):
        S.load_space("{not json")


def test_witness_round_trip():
    space = gallery_space("quadrant").space
    w = check_sleek(space).witness
    back = S.witness_from_json(json.loads(S.dumps(S.witness_to_json(w))))
    assert back == w
    w = check_round(gallery_space("two-lines").space, ToleranceConfig(seed=7)).witness
    assert S.witness_from_json(S.witness_to_json(w)) == w


def test_dumps_is_canonical():
    a = S.dumps({"b": 1, "a": [1, 2]})
    assert a == S.dumps({"a": [1, 2], "b": 1}) and a.endswith("\n")
