import json

import pytest

from span2 import finset as fs
from span2.category import FINSET_OP
from span2.coherence import Law, associator, build_instance
from span2.cospans import dualize_cell
from span2.finset import Atom, ClassRep, Pair, Tup
from span2.serialize import (
    DecodeError,
    decode,
    decode_elem,
    decode_mor,
    decode_obj,
    dumps,
    encode,
    encode_elem,
    locate,
)

from conftest import obj


def roundtrip(value):
    return decode(json.loads(dumps(value)))


@pytest.mark.parametrize("e", [
    Atom("a"),
    Pair("a", Pair("b", "c")),
    Tup([("B", "a"), ("S", Pair(1, 2))]),
    ClassRep(Tup([("l", "x")])),
])
def test_elem_roundtrip(e):
    assert decode_elem(json.loads(json.dumps(encode_elem(e)))) == e


def test_bad_element():
    with pytest.raises(DecodeError):
        decode_elem(3)
    with pytest.raises(DecodeError):
        decode_elem({"pair": ["a"]})


def test_obj_duplicates_rejected():
    with pytest.raises(DecodeError, match="no duplicates"):
        decode_obj({"elements": ["a", "a"]})


def test_mor_totality_and_function():
    names = {"A": obj("a", "b"), "B": obj("u")}
    with pytest.raises(DecodeError, match="totality"):
        decode_mor({"dom": "A", "cod": "B", "table": [["a", "u"]]}, names)
    with pytest.raises(DecodeError, match="function"):
        decode_mor({"dom": "A", "cod": "B", "table": [["a", "u"], ["a", "u"], ["b", "u"]]}, names)
    with pytest.raises(DecodeError, match="unknown object reference"):
        decode_mor({"dom": "Q", "cod": "B", "table": []}, names)


@pytest.mark.parametrize("law", list(Law))
@pytest.mark.parametrize("trial", range(5))
def test_instances_roundtrip(law, trial):
    args, _ = build_instance(law, 9, trial, 3)
    for a in args:
        b = roundtrip(a)
        assert b == a
        if hasattr(a, "witness"):
            assert b.witness == a.witness


@pytest.mark.parametrize("trial", range(5))
def test_cospan_cells_roundtrip(trial):
    (X,), _ = build_instance(Law.VerticalUnits, 2, trial, 3, FINSET_OP)
    Y = dualize_cell(X)
    Z = roundtrip(Y)
    assert Z.same_class(Y) and Z.apex == Y.apex
    K = roundtrip(Y.src)
    assert K == Y.src


def test_associator_roundtrip_uses_structured_ids():
    args, _ = build_instance(Law.Pentagon, 0, 1, 2)
    a = associator(*args[:3])
    assert roundtrip(a) == a


def test_tampered_signature_rejected():
    args, _ = build_instance(Law.VerticalUnits, 0, 3, 3)
    d = encode(args[0])
    d["signature"] = d["signature"] + [["zz", "zz", 1]]
    with pytest.raises(DecodeError, match="signature"):
        decode(d)


def test_broken_square_rejected():
    S = {
        "kind": "span",
        "left_foot": {"elements": ["a1", "a2"]},
        "right_foot": {"elements": ["b"]},
        "apex": {"elements": ["s1", "s2"]},
        "left_leg": {"dom": "apex", "cod": "left_foot", "table": [["s1", "a1"], ["s2", "a2"]]},
        "right_leg": {"dom": "apex", "cod": "right_foot", "table": [["s1", "b"], ["s2", "b"]]},
    }
    cell = {
        "src": S, "dst": S,
        "witness": {
            "apex": {"elements": ["x"]},
            "to_src": {"dom": "apex", "cod": "src.apex", "table": [["x", "s1"]]},
            "to_dst": {"dom": "apex", "cod": "dst.apex", "table": [["x", "s2"]]},
        },
    }
    with pytest.raises(DecodeError, match="commuting squares"):
        decode(cell)


def test_kind_inference():
    D = fs.Diagram({"A": obj("a")}, [])
    d = encode(D)
    assert isinstance(decode(d), fs.Diagram)
    args, _ = build_instance(Law.Triangle, 0, 0, 2)
    d = encode(args[0])
    del d["kind"]
    assert decode(d) == args[0]


def test_unknown_kind():
    with pytest.raises(DecodeError, match="unknown kind"):
        decode({"kind": "banana"})


def test_limit_output_reparses(golden_cospan):
    f, g = golden_cospan
    D = fs.Diagram({"S": f.dom, "B": f.cod, "S2": g.dom}, [("f", "S", "B", f), ("g", "S2", "B", g)])
    L = fs.limit(D)
    d = json.loads(dumps(L))
    apex = decode_obj(d["apex"])
    assert apex == L.apex
    for n, m in d["projections"].items():
        assert decode_mor(m, {"apex": apex}) == L.projections[n]


def test_dumps_is_deterministic():
    args, _ = build_instance(Law.Interchange, 4, 2, 3)
    assert dumps(args[0]) == dumps(args[0])
    assert dumps(roundtrip(args[0])) == dumps(args[0])


def test_locate_points_at_key():
    text = '{\n  "a": 1,\n  "left_leg": {\n    "table": []\n  }\n}'
    assert locate(text, "$.left_leg.table") == 4
    assert locate(text, "$") == 1
