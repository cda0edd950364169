"""Reading and writing signed graphs.

The text format ``sg1``::

    sg1
    # comments run to the end of the line
    v a
    v b
    e e1 a b -
    e e2 a a +

Vertex declarations come before edge declarations; names match
``[A-Za-z0-9_.-]+``.  Files ending in ``.json`` hold the same fields as
``{"format": "sg1", "vertices": [...], "edges": [{"id", "u", "v", "sign"}]}``.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path

from .core import Edge, Sign, SignedGraph, check_signature
from .exceptions import MalformedInputError, ParseError

FORMAT = "sg1"
NAME = re.compile(r"[A-Za-z0-9_.-]+\Z")


def _name(token, what, line):
    if not NAME.match(token):
        raise ParseError(f"invalid {what} name {token!r}", line)
    return token


def _sign(token, line):
    if token == "+":
        return Sign.POSITIVE
    if token == "-":
        return Sign.NEGATIVE
    raise ParseError(f"unknown sign token {token!r} (expected + or -)", line)


def parse_graph(text: str):
    """Parse ``sg1`` text into ``(G, Σ)``; errors carry the offending line number."""
    vertices, edges = [], []
    seen_v, seen_e = set(), set()
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if not header:
            if tokens != [FORMAT]:
                raise ParseError(f"expected header {FORMAT!r}", lineno)
            header = True
            continue
        kind = tokens[0]
        if kind == "v":
            if len(tokens) != 2:
                raise ParseError("vertex line needs exactly one name", lineno)
            if edges:
                raise ParseError("vertex declared after edges", lineno)
            x = _name(tokens[1], "vertex", lineno)
            if x in seen_v:
                raise ParseError(f"duplicate vertex {x!r}", lineno)
            seen_v.add(x)
            vertices.append(x)
        elif kind == "e":
            if len(tokens) != 5:
                raise ParseError("edge line needs id, two endpoints and a sign", lineno)
            eid = _name(tokens[1], "edge", lineno)
            u, v = _name(tokens[2], "vertex", lineno), _name(tokens[3], "vertex", lineno)
            if eid in seen_e:
                raise ParseError(f"duplicate edge id {eid!r}", lineno)
            for x in (u, v):
                if x not in seen_v:
                    raise ParseError(f"edge {eid!r} uses undeclared vertex {x!r}", lineno)
            seen_e.add(eid)
            edges.append(Edge(eid, u, v, _sign(tokens[4], lineno)))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    if not header:
        raise ParseError(f"missing {FORMAT!r} header", 1)
    G = SignedGraph(vertices, edges)
    return G, G.signature


def _checked(G: SignedGraph, signature) -> SignedGraph:
    sig = check_signature(G, signature)
    for x in G.vertices:
        if not isinstance(x, str) or not NAME.match(x):
            raise MalformedInputError(f"vertex name {x!r} cannot be written in {FORMAT}")
    for e in G.edges:
        if not NAME.match(e.id):
            raise MalformedInputError(f"edge id {e.id!r} cannot be written in {FORMAT}")
    return G.with_signature(sig)


def serialize_graph(G: SignedGraph, signature=None) -> str:
    G = _checked(G, signature)
    lines = [FORMAT]
    lines += [f"v {x}" for x in G.vertices]
    lines += [f"e {e.id} {e.u} {e.v} {e.sign.symbol}" for e in G.edges]
    return "\n".join(lines) + "\n"


def graph_to_dict(G: SignedGraph, signature=None) -> dict:
    G = _checked(G, signature)
    return {
        "format": FORMAT,
        "vertices": list(G.vertices),
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "sign": e.sign.symbol} for e in G.edges],
    }


def graph_from_dict(doc) -> tuple:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise ParseError(f"JSON document must have \"format\": \"{FORMAT}\"")
    try:
        vertices = [str(x) for x in doc["vertices"]]
        records = doc["edges"]
        for x in vertices:
            if not NAME.match(x):
                raise ParseError(f"invalid vertex name {x!r}")
        edges = []
        for rec in records:
            eid = str(rec["id"])
            if not NAME.match(eid):
                raise ParseError(f"invalid edge name {eid!r}")
            if rec["sign"] not in ("+", "-"):
                raise ParseError(f"unknown sign token {rec['sign']!r} (expected + or -)")
            edges.append(Edge(eid, str(rec["u"]), str(rec["v"]), Sign.parse(rec["sign"])))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON graph: {exc}") from exc
    G = SignedGraph(vertices, edges)
    return G, G.signature


def loads(text: str, json_format: bool = False):
    if json_format:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from exc
        return graph_from_dict(doc)
    return parse_graph(text)


def dumps(G: SignedGraph, signature=None, json_format: bool = False) -> str:
    if json_format:
        return json.dumps(graph_to_dict(G, signature), indent=2, sort_keys=True) + "\n"
    return serialize_graph(G, signature)


def read_graph(path):
    """Read ``(G, Σ)`` from an ``sg1`` file, or a JSON file when the suffix is ``.json``."""
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), path.suffix.lower() == ".json")


def write_graph(path, G: SignedGraph, signature=None):
    path = Path(path)
    path.write_text(dumps(G, signature, path.suffix.lower() == ".json"), encoding="utf-8")


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
