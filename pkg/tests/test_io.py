import json

import pytest
from hypothesis import given, settings

from sgfrust import MalformedInputError, ParseError, build_graph, generate, parse_graph, read_graph, serialize_graph, write_graph
from sgfrust.io import dumps, graph_from_dict, loads

from conftest import signed_graphs

SAMPLE = """sg1
# a negative digon with a pendant edge
v a
v b
v c
e e1 a b -
e e2 a b +
e e3 b c +   # trailing comment
"""


def test_parse_sample():
    G, sig = parse_graph(SAMPLE)
    assert G.vertices == ("a", "b", "c") or list(G.vertices) == ["a", "b", "c"]
    assert sig == frozenset({"e1"})
    assert len(G.edges) == 3


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("v a\n", 1, "header"),
        ("", 1, "header"),
        ("sg1\nv a\nv a\n", 3, "duplicate vertex"),
        ("sg1\nv a\ne x a a +\ne x a a -\n", 4, "duplicate edge"),
        ("sg1\nv a\ne x a b +\n", 3, "undeclared"),
        ("sg1\nv a\nv b\ne x a b *\n", 4, "sign"),
        ("sg1\nv a\ne x a a +\nv b\n", 4, "after edges"),
        ("sg1\nw a\n", 2, "record type"),
        ("sg1\nv a b\n", 2, "exactly one"),
        ("sg1\nv a\ne x a +\n", 3, "edge line"),
        ("sg1\nv a/b\n", 2, "invalid vertex"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}:" in str(info.value)
    assert fragment in str(info.value)


def test_file_round_trip(tmp_path):
    G, sig, _ = generate("escher_wall", 4)
    for name in ("w.sg1", "w.json"):
        write_graph(tmp_path / name, G, sig)
        H, hsig = read_graph(tmp_path / name)
        assert H == G and hsig == sig
    doc = json.loads((tmp_path / "w.json").read_text())
    assert doc["format"] == "sg1" and len(doc["edges"]) == 30


def test_json_errors():
    with pytest.raises(ParseError):
        loads("{not json", json_format=True)
    with pytest.raises(ParseError):
        graph_from_dict({"format": "other"})
    with pytest.raises(ParseError):
        graph_from_dict({"format": "sg1", "vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": "a", "sign": "?"}]})
    with pytest.raises(ParseError):
        graph_from_dict({"format": "sg1", "vertices": ["a"]})


def test_unwritable_names():
    G = build_graph(["a b"], [])
    with pytest.raises(MalformedInputError):
        serialize_graph(G)


@settings(max_examples=100)
@given(signed_graphs())
def test_round_trip_property(G):
    text = serialize_graph(G)
    H, sig = parse_graph(text)
    assert H == G and sig == G.signature
    assert serialize_graph(H, sig) == text
    J, jsig = loads(dumps(G, json_format=True), json_format=True)
    assert J == G and jsig == G.signature
