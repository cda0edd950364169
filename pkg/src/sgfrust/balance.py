"""Balance with certificates, and enumeration of negative circuits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import SignedGraph, canonical_key, check_signature, components
from .exceptions import BudgetExceededError, PreconditionError

DEFAULT_CIRCUIT_CAP = 10**6


@dataclass(frozen=True)
class BalanceCertificate:
    """Outcome of :func:`is_balanced`.

    ``switch_set`` is set when balanced (``switch(Σ, U) == ∅``); ``circuit``
    lists the edge ids of a negative circuit, in traversal order, when not.
    """

    balanced: bool
    switch_set: frozenset | None = None
    circuit: tuple | None = None

    @property
    def verdict(self) -> str:
        return "balanced" if self.balanced else "unbalanced"

    def __bool__(self):
        return self.balanced


def is_balanced(G: SignedGraph, signature=None) -> BalanceCertificate:
    """Decide balance by a spanning-forest potential.

    Each component is rooted at its first canonical vertex, which is kept
    outside the returned switch set.  A non-tree edge whose sign disagrees
    with the potentials closes a negative circuit through the tree path.
    """
    sig = check_signature(G, signature)
    side = {}
    parent = {}
    depth = {}
    for comp in components(G):
        root = comp.vertices[0]
        side[root], parent[root], depth[root] = 0, None, 0
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for e in comp.incident(x):
                neg = 1 if e.id in sig else 0
                if e.is_loop:
                    if neg:
                        return BalanceCertificate(False, circuit=(e.id,))
                    continue
                y = e.other(x)
                if y not in side:
                    side[y] = side[x] ^ neg
                    parent[y] = (x, e.id)
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif side[y] != side[x] ^ neg:
                    return BalanceCertificate(False, circuit=_close_circuit(x, y, e.id, parent, depth))
    return BalanceCertificate(True, switch_set=frozenset(x for x, s in side.items() if s))


def _close_circuit(x, y, edge_id, parent, depth) -> tuple:
    left, right = [], []
    a, b = x, y
    while depth[a] > depth[b]:
        p, eid = parent[a]
        left.append(eid)
        a = p
    while depth[b] > depth[a]:
        p, eid = parent[b]
        right.append(eid)
        b = p
    while a != b:
        pa, ea = parent[a]
        pb, eb = parent[b]
        left.append(ea)
        right.append(eb)
        a, b = pa, pb
    # x -> lca -> y -> x
    return tuple(left) + tuple(reversed(right)) + (edge_id,)


def iter_circuits(G: SignedGraph) -> Iterator[frozenset]:
    """Yield every circuit of ``G`` exactly once, as a frozenset of edge ids.

    Loops are circuits of length 1 and pairs of parallel edges circuits of
    length 2.  Longer circuits are found by backtracking from their least
    vertex; the direction with the smaller first edge is kept.
    """
    for e in G.loops:
        yield frozenset((e.id,))
    order = {x: i for i, x in enumerate(G.vertices)}
    adj = {x: [(e.other(x), e.id) for e in G.incident(x) if not e.is_loop] for x in G.vertices}
    for s in G.vertices:
        rank = order[s]
        path_edges: list = []
        on_path = {s}
        stack = [(s, iter(adj[s]))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for y, eid in it:
                if path_edges and eid == path_edges[-1]:
                    continue
                if y == s:
                    if path_edges and canonical_key(path_edges[0]) < canonical_key(eid):
                        yield frozenset(path_edges + [eid])
                    continue
                if order[y] < rank or y in on_path:
                    continue
                path_edges.append(eid)
                on_path.add(y)
                stack.append((y, iter(adj[y])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if path_edges and stack:
                    path_edges.pop()
                    on_path.discard(x)


def is_negative(edge_ids, signature) -> bool:
    return len(frozenset(edge_ids) & frozenset(signature)) % 2 == 1


def negative_circuits(G: SignedGraph, signature=None, cap: int = DEFAULT_CIRCUIT_CAP) -> list:
    """All negative circuits as frozensets of edge ids, in canonical order.

    Raises :class:`BudgetExceededError` as soon as more than ``cap`` negative
    circuits have been found.
    """
    if cap < 1:
        raise PreconditionError("cap must be at least 1")
    sig = check_signature(G, signature)
    found = []
    for c in iter_circuits(G):
        if len(c & sig) % 2:
            found.append(c)
            if len(found) > cap:
                raise BudgetExceededError(f"more than {cap} negative circuits", cap=cap)
    found.sort(key=lambda c: (len(c), [canonical_key(i) for i in sorted(c, key=canonical_key)]))
    return found
