"""Criticality: certificates, equilibrated cuts and critical subgraphs.

For a k-frustrated signed graph the following are equivalent:

1. deleting any edge lowers the frustration index,
2. every edge lies in some minimum signature,
3. for a minimum signature Γ, every edge outside Γ lies in an edge cut of
   ``(G, Γ)`` with as many negative as positive edges.

:func:`is_critical` decides (1) or (2); :func:`equilibrated_cut_for_edge`
produces the witnesses of (3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .core import (
    CutSummary,
    SignedGraph,
    canonical_sorted,
    check_signature,
    components,
    cut_summary,
    signature_to_switch_set,
    switch,
)
from .exceptions import InternalInconsistencyError, PreconditionError
from .frustration import (
    DEFAULT_ENUM_MAX_VERTICES,
    FrustrationResult,
    all_min_signatures,
    frustration,
)

METHODS = ("auto", "union", "per-edge", "both")


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict of :func:`is_critical`.

    ``per_edge`` maps each edge to a minimum signature containing it (only
    complete when critical); ``failing_edge`` is an edge whose deletion does
    not lower the index.
    """

    index: int
    critical: bool
    per_edge: dict = field(default_factory=dict)
    failing_edge: Optional[str] = None
    method: str = "union"
    certified: bool = True

    @property
    def verdict(self) -> str:
        return "critical" if self.critical else "not-critical"

    def __bool__(self):
        return self.critical


@dataclass(frozen=True)
class EquilibratedCutWitness:
    edge: str
    switch_set: frozenset
    summary: CutSummary


def _solve(G, sig, solver, time_budget) -> FrustrationResult:
    return frustration(G, sig, method=solver, time_budget=time_budget)


def _union_method(G: SignedGraph, sig: frozenset, max_vertices: int) -> CriticalityReport:
    sigs = all_min_signatures(G, sig, max_vertices=max_vertices)
    index = len(sigs[0]) if sigs else 0
    per_edge = {}
    for s in sigs:
        for e in canonical_sorted(s):
            per_edge.setdefault(e, s)
    missing = [e for e in G.edge_ids if e not in per_edge]
    critical = index >= 1 and not missing
    failing = None
    if not critical and G.edges:
        failing = missing[0] if missing else G.edge_ids[0]
    return CriticalityReport(index, critical, dict(sorted(per_edge.items())) if critical else per_edge,
                             failing, "union", True)


def _per_edge_method(G: SignedGraph, sig: frozenset, solver: str, time_budget) -> CriticalityReport:
    base = _solve(G, sig, solver, time_budget)
    index = base.index
    certified = base.certified
    if index == 0:
        failing = G.edge_ids[0] if G.edges else None
        return CriticalityReport(0, False, {}, failing, "per-edge", certified)
    per_edge = {}
    for e in G.edge_ids:
        H = G.remove_edges([e])
        sub = _solve(H, sig - {e}, solver, time_budget)
        certified = certified and sub.certified
        if sub.index >= index:
            return CriticalityReport(index, False, per_edge, e, "per-edge", certified)
        # the switch set that is optimal without e yields a minimum signature through e
        witness = switch(G, sig, sub.switch_set)
        if e not in witness or len(witness) != index:
            raise InternalInconsistencyError(f"deleting {e!r} gave no minimum signature through it")
        per_edge[e] = witness
    return CriticalityReport(index, True, per_edge, None, "per-edge", certified)


def is_critical(
    G: SignedGraph,
    signature=None,
    method: str = "auto",
    solver: str = "auto",
    time_budget: float | None = None,
    max_vertices: int = DEFAULT_ENUM_MAX_VERTICES,
) -> CriticalityReport:
    """Decide whether ``(G, Σ)`` is ``l(G, Σ)``-critical.

    Parameters
    ----------
    method : {"auto", "union", "per-edge", "both"}
        ``"auto"`` is ``"union"`` when every component fits the switch
        enumerator and ``"per-edge"`` otherwise.  ``"union"`` checks that
        the minimum signatures cover ``E(G)``; ``"per-edge"`` recomputes ``l(G - e)`` for every edge; ``"both"``
        runs the two and raises if they disagree.
    solver : str
        Frustration solver for the per-edge method (``"auto"``, ``"enum"``,
        ``"bnb"``).  Branch-and-bound runs that hit ``time_budget`` make the
        report uncertified.
    """
    sig = check_signature(G, signature)
    if method not in METHODS:
        raise PreconditionError(f"unknown criticality method {method!r}")
    if method == "auto":
        fits = all(len(c) <= max_vertices for c in components(G))
        method = "union" if fits else "per-edge"
    if method == "union":
        return _union_method(G, sig, max_vertices)
    if method == "per-edge":
        return _per_edge_method(G, sig, solver, time_budget)
    a = _union_method(G, sig, max_vertices)
    b = _per_edge_method(G, sig, solver, time_budget)
    if a.critical != b.critical or a.index != b.index:
        raise InternalInconsistencyError(
            f"criticality methods disagree: union={a.verdict}, per-edge={b.verdict}"
        )
    return CriticalityReport(a.index, a.critical, a.per_edge, b.failing_edge if not b.critical else None,
                             "both", b.certified)


def require_critical(G: SignedGraph, signature=None, **kwargs) -> CriticalityReport:
    report = is_critical(G, signature, **kwargs)
    if not report.critical:
        raise PreconditionError(
            f"input is not critical (index {report.index}, edge {report.failing_edge!r} is not essential)"
        )
    return report


def equilibrated_cut_for_edge(
    G: SignedGraph, gamma, edge_id: str, max_vertices: int = DEFAULT_ENUM_MAX_VERTICES
) -> EquilibratedCutWitness | None:
    """Equilibrated cut of ``(G, Γ)`` through the positive edge ``edge_id``.

    ``Γ`` must be a minimum signature.  The cut is ``Γ Δ Γ'`` for the first
    minimum signature ``Γ'`` (canonical order) containing the edge; its
    switch set excludes the first vertex of each component.  Returns ``None``
    when no minimum signature contains the edge.
    """
    gamma = check_signature(G, gamma)
    G.edge(edge_id)
    if edge_id in gamma:
        raise PreconditionError(f"edge {edge_id!r} is negative in the given signature")
    sigs = all_min_signatures(G, gamma, max_vertices=max_vertices)
    if not sigs or len(gamma) != len(sigs[0]):
        raise PreconditionError("the given signature is not a minimum signature")
    for other in sigs:
        if edge_id not in other:
            continue
        U = signature_to_switch_set(G, gamma, other)
        summary = cut_summary(G, gamma, U)
        if not summary.equilibrated:
            raise InternalInconsistencyError("cut between two minimum signatures is not equilibrated")
        return EquilibratedCutWitness(edge_id, U, summary)
    return None


def extract_critical_subgraph(G: SignedGraph, signature=None, m: int = 1, solver: str = "auto"):
    """An ``m``-critical subgraph, returned as ``(H, Σ ∩ E(H))``.

    Deletes ``l - m`` edges of a minimum signature, then repeatedly deletes
    the first edge (canonical order) whose removal keeps the index at ``m``.
    Isolated vertices are dropped from the result.
    """
    sig = check_signature(G, signature)
    base = _solve(G, sig, solver, None)
    if not base.certified:
        raise PreconditionError("frustration index could not be certified")
    if not 1 <= m <= base.index:
        raise PreconditionError(f"m must lie in [1, {base.index}], got {m}")
    drop = canonical_sorted(base.witness)[: base.index - m]
    H = G.remove_edges(drop)
    hsig = sig - frozenset(drop)
    restart = True
    while restart:
        restart = False
        for e in H.edge_ids:
            H2 = H.remove_edges([e])
            if _solve(H2, hsig - {e}, solver, None).index == m:
                H, hsig = H2, hsig - {e}
                restart = True
                break
    H = H.without_isolated_vertices()
    hsig = hsig & frozenset(H.edge_ids)
    report = is_critical(H, hsig, method="per-edge", solver=solver)
    if not report.critical or report.index != m:
        raise InternalInconsistencyError(f"extraction did not produce an {m}-critical subgraph")
    return H.with_signature(hsig), hsig


@dataclass(frozen=True)
class LambdaCheck:
    edge_connectivity: int
    lower: int
    upper: int

    @property
    def passed(self) -> bool:
        return self.lower <= self.edge_connectivity <= self.upper


def edge_connectivity(G: SignedGraph) -> int:
    """Edge connectivity of the underlying multigraph (loops ignored)."""
    if len(G) < 2:
        raise PreconditionError("edge connectivity needs at least two vertices")
    if len(components(G)) > 1:
        return 0
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    for e in G.edges:
        if e.is_loop:
            continue
        if g.has_edge(e.u, e.v):
            g[e.u][e.v]["weight"] += 1
        else:
            g.add_edge(e.u, e.v, weight=1)
    value, _ = nx.stoer_wagner(g)
    return int(value)


def check_lambda_bounds(G: SignedGraph, signature=None, report: CriticalityReport | None = None) -> LambdaCheck:
    """Check ``2 <= λ(G) <= 2k`` for a connected k-critical graph other than C₁."""
    sig = check_signature(G, signature)
    if len(components(G)) != 1:
        raise PreconditionError("graph must be connected")
    if len(G) < 2:
        raise PreconditionError("single-vertex graphs have no edge connectivity")
    if report is None:
        report = is_critical(G, sig)
    if not report.critical:
        raise PreconditionError("graph is not critical")
    return LambdaCheck(edge_connectivity(G), 2, 2 * report.index)
