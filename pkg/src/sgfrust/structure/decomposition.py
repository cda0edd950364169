"""Decompositions of critical signed graphs into edge-disjoint critical parts."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import SignedGraph, canonical_key, canonical_sorted, check_signature, components
from ..exceptions import BudgetExceededError, InternalInconsistencyError

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_INDEX = 4


@dataclass(frozen=True)
class DecompositionHint:
    part: frozenset
    rest: frozenset
    reason: str


@dataclass(frozen=True)
class DecompositionWitness:
    parts: tuple
    indices: tuple


def trivially_decomposable(G: SignedGraph, signature=None) -> DecompositionHint | None:
    """A negative loop or an opposite-signed parallel pair splits off a 1-critical part."""
    sig = check_signature(G, signature)
    if len(G.edges) < 2:
        return None
    everything = frozenset(G.edge_ids)
    for e in G.loops:
        if e.id in sig:
            part = frozenset((e.id,))
            return DecompositionHint(part, everything - part, "negative loop")
    for x in G.vertices:
        for y in G.neighbors(x):
            if canonical_sorted((x, y))[0] != x:
                continue
            between = G.edges_between(x, y)
            pos = [e.id for e in between if e.id not in sig]
            neg = [e.id for e in between if e.id in sig]
            if pos and neg:
                part = frozenset((pos[0], neg[0]))
                return DecompositionHint(part, everything - part, "parallel edges of opposite sign")
    return None


class _Search:
    def __init__(self, G: SignedGraph, sig: frozenset):
        self.G = G
        self.sig = sig
        self.cache = {}

    def info(self, edges: frozenset):
        """``(index, critical)`` of the edge-induced subgraph."""
        if edges not in self.cache:
            from ..criticality import is_critical

            H = self.G.edge_subgraph(edges)
            r = is_critical(H, self.sig & edges)
            self.cache[edges] = (r.index, r.critical)
        return self.cache[edges]

    def split(self, edges: frozenset):
        """First bipartition of ``edges`` into two critical parts whose indices add up."""
        H = self.G.edge_subgraph(edges)
        k, _ = self.info(edges)
        ids = list(H.edge_ids)
        if len(ids) < 2:
            return None
        ends = {e.id: (e.u, e.v) for e in H.edges}
        remaining = {x: H.degree(x) for x in H.vertices}
        deg = {x: [0, 0] for x in H.vertices}
        side = {}

        def ok(x) -> bool:
            # once a vertex is fully assigned neither part may leave it with degree 1
            return remaining[x] > 0 or (deg[x][0] != 1 and deg[x][1] != 1)

        def assign(i, s):
            u, v = ends[ids[i]]
            side[ids[i]] = s
            for x in (u, v):
                remaining[x] -= 1
                deg[x][s] += 1

        def unassign(i, s):
            u, v = ends[ids[i]]
            del side[ids[i]]
            for x in (u, v):
                remaining[x] += 1
                deg[x][s] -= 1

        def leaf():
            a = frozenset(e for e, s in side.items() if s == 0)
            b = edges - a
            if not b:
                return None
            ka, ca = self.info(a)
            if not ca or ka < 1 or ka >= k:
                return None
            kb, cb = self.info(b)
            if cb and ka + kb == k:
                return a, b
            return None

        def rec(i):
            if i == len(ids):
                return leaf()
            choices = (0,) if i == 0 else (0, 1)
            for s in choices:
                assign(i, s)
                u, v = ends[ids[i]]
                if ok(u) and ok(v):
                    found = rec(i + 1)
                    if found:
                        return found
                unassign(i, s)
            return None

        return rec(0)

    def decompose(self, edges: frozenset) -> list:
        found = self.split(edges)
        if found is None:
            return [edges]
        a, b = found
        self._check_shared(a, b)
        return self.decompose(a) + self.decompose(b)

    def _check_shared(self, a, b):
        union = self.G.edge_subgraph(a | b)
        if len(components(union)) != 1:
            return
        va = set(self.G.edge_subgraph(a).vertices)
        vb = set(self.G.edge_subgraph(b).vertices)
        shared = va & vb
        if not shared:
            raise InternalInconsistencyError("parts of a connected decomposition share no vertex")
        if any(union.degree(x) < 4 for x in shared):
            raise InternalInconsistencyError("a vertex shared by two parts has degree below 4")


def decompose_exhaustive(
    G: SignedGraph,
    signature=None,
    max_edges: int = DEFAULT_MAX_EDGES,
    max_index: int = DEFAULT_MAX_INDEX,
) -> DecompositionWitness | None:
    """Split a critical graph into non-decomposable critical parts by exhaustive search.

    Returns ``None`` when the graph is non-decomposable.  Above ``max_edges``
    edges or index ``max_index`` the search is refused with
    :class:`BudgetExceededError`, so an answer is never a guess.
    """
    from ..criticality import require_critical

    sig = check_signature(G, signature)
    if len(G.edges) > max_edges:
        raise BudgetExceededError(f"exhaustive decomposition is capped at {max_edges} edges", cap=max_edges)
    report = require_critical(G, sig)
    if report.index > max_index:
        raise BudgetExceededError(f"exhaustive decomposition is capped at index {max_index}", cap=max_index)
    search = _Search(G, sig)
    everything = frozenset(G.edge_ids)
    search.cache[everything] = (report.index, True)
    parts = search.decompose(everything)
    if len(parts) == 1:
        return None
    parts.sort(key=lambda p: [canonical_key(i) for i in canonical_sorted(p)])
    indices = tuple(search.info(p)[0] for p in parts)
    if sum(indices) != report.index:
        raise InternalInconsistencyError("decomposition indices do not add up")
    return DecompositionWitness(tuple(parts), indices)
