"""Signed multigraphs, cuts and switching.

A :class:`SignedGraph` is an immutable multigraph whose edges carry a sign.
Loops and parallel edges are allowed; parallel edges differ only by their
identifier.  A *signature* is a frozenset of edge identifiers (the edges
declared negative) and a *switch set* is a frozenset of vertices.

Everything that enumerates vertices or edges does so in canonical order,
given by :func:`canonical_key`.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping

from .exceptions import MalformedInputError

Signature = frozenset
SwitchSet = frozenset

_DIGITS = re.compile(r"(\d+)")


def canonical_key(item) -> tuple:
    """Natural sort key: ``"v2"`` sorts before ``"v10"``."""
    parts = _DIGITS.split(str(item))
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p != "")


def canonical_sorted(items: Iterable) -> list:
    return sorted(items, key=canonical_key)


class Sign(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return NotImplemented

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def parse(cls, token) -> "Sign":
        if isinstance(token, Sign):
            return token
        if token in ("+", "+1", 1, "positive", "pos"):
            return cls.POSITIVE
        if token in ("-", "-1", -1, "negative", "neg"):
            return cls.NEGATIVE
        raise MalformedInputError(f"unknown sign token {token!r}")


@dataclass(frozen=True)
class Edge:
    id: str
    u: Hashable
    v: Hashable
    sign: Sign = Sign.POSITIVE

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x):
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise MalformedInputError(f"vertex {x!r} is not an endpoint of edge {self.id!r}")


@dataclass(frozen=True)
class CutSummary:
    total: int
    negatives: int
    positives: int

    @property
    def equilibrated(self) -> bool:
        return self.negatives == self.positives

    def as_tuple(self) -> tuple:
        return (self.total, self.negatives, self.positives)


class SignedGraph:
    """Immutable signed multigraph.

    Parameters
    ----------
    vertices : iterable of hashable
        Vertex identifiers.
    edges : iterable of Edge or (id, u, v, sign) tuples
        Edge records; ``u == v`` makes a loop.
    """

    __slots__ = ("_vertices", "_vertex_set", "_edges", "_edge_map", "_incident", "_hash")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vertex_list = list(vertices)
        vertex_set = frozenset(vertex_list)
        if len(vertex_set) != len(vertex_list):
            seen, dup = set(), None
            for x in vertex_list:
                if x in seen:
                    dup = x
                    break
                seen.add(x)
            raise MalformedInputError(f"duplicate vertex {dup!r}")
        edge_map: dict[str, Edge] = {}
        for rec in edges:
            e = rec if isinstance(rec, Edge) else _edge_from_record(rec)
            if e.id in edge_map:
                raise MalformedInputError(f"duplicate edge id {e.id!r}")
            for x in (e.u, e.v):
                if x not in vertex_set:
                    raise MalformedInputError(f"edge {e.id!r} references unknown vertex {x!r}")
            edge_map[e.id] = e
        self._vertex_set = vertex_set
        self._vertices = tuple(canonical_sorted(vertex_set))
        self._edges = tuple(edge_map[i] for i in canonical_sorted(edge_map))
        self._edge_map = edge_map
        incident: dict = {x: [] for x in self._vertices}
        for e in self._edges:
            incident[e.u].append(e)
            if not e.is_loop:
                incident[e.v].append(e)
        self._incident = {x: tuple(es) for x, es in incident.items()}
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self._edges)

    @property
    def signature(self) -> frozenset:
        """The set of negative edges."""
        return frozenset(e.id for e in self._edges if e.sign is Sign.NEGATIVE)

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, x):
        return x in self._vertex_set

    def has_vertex(self, x) -> bool:
        return x in self._vertex_set

    def has_edge(self, edge_id) -> bool:
        return edge_id in self._edge_map

    def edge(self, edge_id) -> Edge:
        try:
            return self._edge_map[edge_id]
        except KeyError:
            raise MalformedInputError(f"unknown edge id {edge_id!r}") from None

    def incident(self, x) -> tuple:
        """Edges incident with ``x``; a loop is listed once."""
        return self._incident[x]

    def degree(self, x) -> int:
        """Degree of ``x``; a loop contributes 2."""
        return sum(2 if e.is_loop else 1 for e in self._incident[x])

    def neighbors(self, x) -> list:
        """Distinct neighbours of ``x`` other than ``x`` itself."""
        return canonical_sorted({e.other(x) for e in self._incident[x] if not e.is_loop})

    def edges_between(self, x, y) -> tuple:
        if x == y:
            return tuple(e for e in self._incident[x] if e.is_loop)
        return tuple(e for e in self._incident[x] if not e.is_loop and e.other(x) == y)

    @property
    def loops(self) -> tuple:
        return tuple(e for e in self._edges if e.is_loop)

    def is_simple(self) -> bool:
        seen = set()
        for e in self._edges:
            if e.is_loop:
                return False
            pair = frozenset((e.u, e.v))
            if pair in seen:
                return False
            seen.add(pair)
        return True

    def is_cubic(self) -> bool:
        return all(self.degree(x) == 3 for x in self._vertices)

    # -- derived graphs ----------------------------------------------------

    def with_signature(self, signature: Iterable) -> "SignedGraph":
        """Same underlying graph, with exactly ``signature`` negative."""
        sig = check_signature(self, signature)
        return SignedGraph(
            self._vertices,
            (Edge(e.id, e.u, e.v, Sign.NEGATIVE if e.id in sig else Sign.POSITIVE) for e in self._edges),
        )

    def remove_edges(self, edge_ids: Iterable) -> "SignedGraph":
        drop = set(edge_ids)
        unknown = drop - set(self._edge_map)
        if unknown:
            raise MalformedInputError(f"unknown edge ids {canonical_sorted(unknown)!r}")
        return SignedGraph(self._vertices, (e for e in self._edges if e.id not in drop))

    def edge_subgraph(self, edge_ids: Iterable, keep_vertices: bool = False) -> "SignedGraph":
        """Subgraph formed by ``edge_ids`` and their endpoints."""
        keep = set(edge_ids)
        es = [self.edge(i) for i in canonical_sorted(keep)]
        if keep_vertices:
            vs = self._vertices
        else:
            vs = {x for e in es for x in (e.u, e.v)}
        return SignedGraph(vs, es)

    def induced_subgraph(self, vertices: Iterable) -> "SignedGraph":
        vs = set(vertices)
        return SignedGraph(vs, (e for e in self._edges if e.u in vs and e.v in vs))

    def without_isolated_vertices(self) -> "SignedGraph":
        return SignedGraph((x for x in self._vertices if self._incident[x]), self._edges)

    def relabel(self, vertex_map: Mapping, edge_map: Mapping | None = None) -> "SignedGraph":
        edge_map = edge_map or {}
        return SignedGraph(
            (vertex_map.get(x, x) for x in self._vertices),
            (Edge(edge_map.get(e.id, e.id), vertex_map.get(e.u, e.u), vertex_map.get(e.v, e.v), e.sign)
             for e in self._edges),
        )

    def to_networkx(self):
        """Return a ``networkx.MultiGraph`` with ``id`` and ``sign`` edge attributes."""
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(self._vertices)
        for e in self._edges:
            g.add_edge(e.u, e.v, key=e.id, id=e.id, sign=int(e.sign))
        return g

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __iter__(self) -> Iterator:
        return iter(self._vertices)

    def __repr__(self):
        return f"SignedGraph(|V|={len(self._vertices)}, |E|={len(self._edges)}, |Σ|={len(self.signature)})"


def _edge_from_record(rec) -> Edge:
    try:
        if isinstance(rec, Mapping):
            eid, u, v, s = rec["id"], rec["u"], rec["v"], rec.get("sign", "+")
        else:
            eid, u, v, *rest = rec
            s = rest[0] if rest else "+"
    except (TypeError, ValueError, KeyError) as exc:
        raise MalformedInputError(f"cannot interpret edge record {rec!r}") from exc
    return Edge(str(eid), u, v, Sign.parse(s))


def build_graph(vertices: Iterable = (), edges: Iterable = ()) -> SignedGraph:
    """Validate and build a :class:`SignedGraph`.

    ``edges`` holds :class:`Edge` objects, ``(id, u, v, sign)`` tuples or
    mappings with those keys.  Signs may be ``"+"``/``"-"``, ``±1`` or
    :class:`Sign` members.
    """
    return SignedGraph(vertices, edges)


def disjoint_union(*graphs: SignedGraph, prefixes: Iterable[str] | None = None) -> SignedGraph:
    """Disjoint union; vertex and edge names are prefixed with ``g<i>.``."""
    prefixes = list(prefixes) if prefixes is not None else [f"g{i}." for i in range(len(graphs))]
    vs, es = [], []
    for p, g in zip(prefixes, graphs):
        vs.extend(f"{p}{x}" for x in g.vertices)
        es.extend(Edge(f"{p}{e.id}", f"{p}{e.u}", f"{p}{e.v}", e.sign) for e in g.edges)
    return SignedGraph(vs, es)


# -- signatures and switch sets --------------------------------------------


def check_signature(G: SignedGraph, signature) -> frozenset:
    if signature is None:
        return G.signature
    sig = frozenset(signature)
    unknown = [i for i in sig if not G.has_edge(i)]
    if unknown:
        raise MalformedInputError(f"signature contains unknown edges {canonical_sorted(unknown)!r}")
    return sig


def check_switch_set(G: SignedGraph, U) -> frozenset:
    members = frozenset(U)
    unknown = [x for x in members if not G.has_vertex(x)]
    if unknown:
        raise MalformedInputError(f"switch set contains unknown vertices {canonical_sorted(unknown)!r}")
    return members


def cut(G: SignedGraph, U) -> frozenset:
    """Edge ids of ∂(U): non-loop edges with exactly one endpoint in ``U``."""
    U = check_switch_set(G, U)
    return frozenset(e.id for e in G.edges if (e.u in U) != (e.v in U))


def switch(G: SignedGraph, signature, U) -> frozenset:
    """Return ``signature Δ ∂(U)``.

    Loops never lie in a cut, so their membership is unchanged.
    """
    sig = check_signature(G, signature)
    return sig ^ cut(G, U)


def cut_summary(G: SignedGraph, signature, U) -> CutSummary:
    sig = check_signature(G, signature)
    edges = cut(G, U)
    neg = len(edges & sig)
    return CutSummary(len(edges), neg, len(edges) - neg)


def components(G: SignedGraph) -> list:
    """Connected components as subgraphs, ordered by their first vertex."""
    parent = {x: x for x in G.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in G.edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
    groups = defaultdict(list)
    for x in G.vertices:
        groups[find(x)].append(x)
    blocks = sorted(groups.values(), key=lambda vs: canonical_key(vs[0]))
    out = []
    for vs in blocks:
        members = set(vs)
        out.append(SignedGraph(vs, (e for e in G.edges if e.u in members)))
    return out


def is_connected(G: SignedGraph) -> bool:
    return len(components(G)) <= 1


def signature_to_switch_set(G: SignedGraph, signature, other) -> frozenset | None:
    """Return U with ``signature Δ ∂(U) == other``, or ``None`` if the two are not equivalent.

    U excludes the first canonical vertex of every component.
    """
    a = check_signature(G, signature)
    b = check_signature(G, other)
    diff = a ^ b
    side = {}
    for comp in components(G):
        root = comp.vertices[0]
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for e in comp.incident(x):
                if e.is_loop:
                    if e.id in diff:
                        return None
                    continue
                y = e.other(x)
                want = side[x] ^ (1 if e.id in diff else 0)
                if y not in side:
                    side[y] = want
                    stack.append(y)
                elif side[y] != want:
                    return None
    return frozenset(x for x, s in side.items() if s)
