"""Cyclic edge connectivity and the structural checks for members of S*."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from ..core import SignedGraph, check_signature, components
from ..exceptions import BudgetExceededError, PreconditionError

DEFAULT_CYCLIC_CAP = 40


def _cyclic_components(n, edges, removed) -> int:
    """Number of components of ``(range(n), edges - removed)`` that contain a circuit."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = set()
    for i, (u, v) in enumerate(edges):
        if i in removed:
            continue
        a, b = find(u), find(v)
        if a == b:
            cyclic.add(a)
        else:
            parent[a] = b
            if a in cyclic:
                cyclic.discard(a)
                cyclic.add(b)
    return len({find(x) for x in cyclic})


def _shortest_circuit(G: SignedGraph):
    """Vertex set of a shortest circuit, or ``None`` for a forest."""
    if G.loops:
        return {G.loops[0].u}
    for x in G.vertices:
        for y in G.neighbors(x):
            if len(G.edges_between(x, y)) > 1:
                return {x, y}
    best = None
    for s in G.vertices:
        dist, parent = {s: 0}, {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y not in dist:
                    dist[y], parent[y] = dist[x] + 1, x
                    queue.append(y)
                elif parent[x] != y and (best is None or dist[x] + dist[y] + 1 < best[0]):
                    path = set()
                    for z in (x, y):
                        while z is not None:
                            path.add(z)
                            z = parent[z]
                    best = (dist[x] + dist[y] + 1, path)
    # the union of two tree paths may carry a tail through s; a closed walk is enough
    return None if best is None else best[1]


def cyclic_edge_connectivity(G: SignedGraph, cap: int = DEFAULT_CYCLIC_CAP) -> int:
    """Smallest edge cut leaving two components that both contain a circuit.

    Graphs with no such cut (``K4``, ``K_{3,3}``, ...) get the cycle rank
    ``|E| - |V| + 1``.  Only cubic graphs are accepted.
    """
    if not G.is_cubic():
        raise PreconditionError("cyclic edge connectivity is only computed for cubic graphs")
    if len(G) > cap:
        raise BudgetExceededError(f"cyclic edge connectivity is capped at {cap} vertices", cap=cap)
    index = {x: i for i, x in enumerate(G.vertices)}
    edges = [(index[e.u], index[e.v]) for e in G.edges]
    n, m = len(G), len(edges)
    upper = m - n + len(components(G))
    ring = _shortest_circuit(G)
    if ring is not None:
        leaving = {i for i, e in enumerate(G.edges) if (e.u in ring) != (e.v in ring)}
        if len(leaving) < upper and _cyclic_components(n, edges, leaving) >= 2:
            upper = len(leaving)
    for size in range(1, upper):
        for removed in combinations(range(m), size):
            if _cyclic_components(n, edges, set(removed)) >= 2:
                return size
    return upper


@dataclass(frozen=True)
class StructureReport:
    """Each check maps to ``(passed, detail)``."""

    checks: dict

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())


def verify_s_star_structure(G: SignedGraph, signature=None, cyclic_cap: int = DEFAULT_CYCLIC_CAP) -> StructureReport:
    """Check the consequences of membership in S* for an irreducible critical graph with k >= 3:
    cubic, cyclically 4-edge-connected, no two edge-disjoint negative circuits."""
    from ..criticality import is_critical
    from .circuits import two_edge_disjoint_negative_circuits
    from .subdivision import irreducible

    sig = check_signature(G, signature)
    checks = {}
    report = is_critical(G, sig)
    checks["critical"] = (report.critical, f"index {report.index}")
    checks["index>=3"] = (report.index >= 3, f"index {report.index}")
    checks["irreducible"] = (irreducible(G, sig), "")
    cubic = G.is_cubic()
    checks["cubic"] = (cubic, "" if cubic else "degrees " + ",".join(sorted({str(G.degree(x)) for x in G.vertices})))
    if cubic:
        c = cyclic_edge_connectivity(G, cyclic_cap)
        checks["cyclic_edge_connectivity>=4"] = (c >= 4, str(c))
    else:
        checks["cyclic_edge_connectivity>=4"] = (False, "not cubic")
    w = two_edge_disjoint_negative_circuits(G, sig)
    detail = "" if w is None else f"{sorted(w.first)} / {sorted(w.second)}"
    checks["no_disjoint_negative_circuits"] = (w is None, detail)
    return StructureReport(checks)
