"""Edge-disjoint negative circuits and membership in S*."""

from __future__ import annotations

from dataclasses import dataclass

from ..balance import DEFAULT_CIRCUIT_CAP, is_balanced
from ..core import SignedGraph, canonical_key, check_signature
from ..exceptions import BudgetExceededError, InternalInconsistencyError, PreconditionError


@dataclass(frozen=True)
class DisjointCircuitWitness:
    first: frozenset
    second: frozenset

    def __post_init__(self):
        if self.first & self.second:
            raise InternalInconsistencyError("witness circuits share an edge")


class _Parity:
    """Balance test for ``G`` minus a set of edges, on integer-indexed arrays."""

    def __init__(self, G: SignedGraph, sig: frozenset):
        self.index = {x: i for i, x in enumerate(G.vertices)}
        self.n = len(G.vertices)
        self.edges = [(e.id, self.index[e.u], self.index[e.v], 1 if e.id in sig else 0) for e in G.edges]

    def balanced_without(self, removed) -> bool:
        parent = list(range(self.n))
        parity = [0] * self.n
        size = [1] * self.n

        def find(x):
            p = 0
            while parent[x] != x:
                p ^= parity[x]
                x = parent[x]
            return x, p

        for eid, u, v, s in self.edges:
            if eid in removed:
                continue
            if u == v:
                if s:
                    return False
                continue
            ru, pu = find(u)
            rv, pv = find(v)
            if ru == rv:
                if pu ^ pv != s:
                    return False
                continue
            if size[ru] > size[rv]:
                ru, rv = rv, ru
            parent[ru] = rv
            parity[ru] = pu ^ pv ^ s
            size[rv] += size[ru]
        return True


def _can_return(adj, y, via, s, on_path, order, rank) -> bool:
    """Whether ``y`` reaches ``s`` avoiding the path, other than back along ``via``."""
    seen = {y}
    stack = [y]
    while stack:
        x = stack.pop()
        for z, eid, _ in adj[x]:
            if z == s and eid != via:
                return True
            if z in seen or z in on_path or order[z] < rank:
                continue
            seen.add(z)
            stack.append(z)
    return False


def two_edge_disjoint_negative_circuits(
    G: SignedGraph, signature=None, cap: int = DEFAULT_CIRCUIT_CAP
) -> DisjointCircuitWitness | None:
    """Find negative circuits ``C`` and ``D`` with no common edge.

    Such a pair exists iff ``G - E(C)`` is unbalanced for some negative
    circuit ``C``.  Circuits are grown as paths from their least vertex; a
    path is abandoned once removing its edges leaves a balanced graph, since
    every circuit through it would then fail too.  ``cap`` bounds the number
    of negative circuits examined.
    """
    if cap < 1:
        raise PreconditionError("cap must be at least 1")
    sig = check_signature(G, signature)
    par = _Parity(G, sig)
    examined = 0

    def witness(c: frozenset):
        rest = is_balanced(G.remove_edges(c), sig - c)
        if rest.balanced:
            return None
        return DisjointCircuitWitness(c, frozenset(rest.circuit))

    for e in G.loops:
        if e.id in sig:
            examined += 1
            w = witness(frozenset((e.id,)))
            if w is not None:
                return w
    order = {x: i for i, x in enumerate(G.vertices)}
    adj = {x: [(e.other(x), e.id, 1 if e.id in sig else 0) for e in G.incident(x) if not e.is_loop]
           for x in G.vertices}
    for s in G.vertices:
        rank = order[s]
        path: list = []
        on_path = {s}
        parity = [0]
        stack = [(s, iter(adj[s]))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for y, eid, neg in it:
                if path and eid == path[-1]:
                    continue
                if y == s:
                    if not path or canonical_key(path[0]) > canonical_key(eid):
                        continue
                    if parity[-1] ^ neg:
                        examined += 1
                        if examined > cap:
                            raise BudgetExceededError(f"more than {cap} negative circuits examined", cap=cap)
                        c = frozenset(path + [eid])
                        if not par.balanced_without(c):
                            return witness(c)
                    continue
                if order[y] < rank or y in on_path:
                    continue
                if not _can_return(adj, y, eid, s, on_path, order, rank):
                    continue
                path.append(eid)
                if par.balanced_without(set(path)):
                    path.pop()
                    continue
                on_path.add(y)
                parity.append(parity[-1] ^ neg)
                stack.append((y, iter(adj[y])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if stack:
                    path.pop()
                    parity.pop()
                    on_path.discard(x)
    return None


def in_s_star(G: SignedGraph, signature=None, cap: int = DEFAULT_CIRCUIT_CAP, report=None) -> bool:
    """True iff the critical graph ``(G, Σ)`` has no two edge-disjoint negative circuits."""
    from ..criticality import is_critical

    sig = check_signature(G, signature)
    if report is None:
        report = is_critical(G, sig)
    if not report.critical:
        raise PreconditionError("S* membership is defined for critical graphs only")
    return two_edge_disjoint_negative_circuits(G, sig, cap) is None
