import json

import pytest

from as_kit.asclass import is_vanishing
from as_kit.cohring import ring_cpn
from as_kit.formats import FormatError, bundles_from_json, load_bundle, load_ring


def s2_bundle(c1s, ring="s2"):
    return {"p": 7, "ring": ring, "eigen": [{"rank": 1, "chern": [{"a": c}]} for c in c1s]}


def test_builtin_ring_reference():
    (b,) = bundles_from_json(s2_bundle([[1, 1], [1, 1], [-1, 1]]))
    assert is_vanishing(b)


def test_ring_file_reference(tmp_path):
    (tmp_path / "ring.json").write_text(json.dumps(ring_cpn(1, 7).to_json()))
    bundles = bundles_from_json([s2_bundle([1, 1, -1], "ring.json")] * 2, tmp_path)
    assert len(bundles) == 2 and bundles[0].ring is bundles[1].ring
    assert is_vanishing(bundles[0])


def test_inline_ring():
    data = s2_bundle(["1", "1", "-1"], ring_cpn(1, 7).to_json())
    assert is_vanishing(bundles_from_json({"bundles": [data]})[0])


def test_ring_prime_mismatch():
    with pytest.raises(FormatError, match="p="):
        load_ring(ring_cpn(1, 5).to_json(), 7)


def test_unknown_ring():
    with pytest.raises(FormatError, match="unknown ring"):
        load_ring("klein-bottle", 7)


@pytest.mark.parametrize("obj", [
    {"p": 7, "ring": "s2"},
    {"p": 7, "ring": "s2", "eigen": [{"chern": []}] * 3},
    [1, 2],
])
def test_malformed(obj):
    with pytest.raises((FormatError, ValueError)):
        bundles_from_json(obj)


def test_not_an_object():
    with pytest.raises(FormatError):
        load_bundle(3)
    with pytest.raises(FormatError):
        bundles_from_json("text")
