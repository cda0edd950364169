"""Independent certificate checkers.

Nothing here calls a frustration solver: every check works directly from the
graph and the certificate, so reports can be re-verified cheaply.
"""

from __future__ import annotations

from collections import Counter

from .core import SignedGraph, check_signature, check_switch_set, cut, cut_summary, signature_to_switch_set
from .exceptions import InternalInconsistencyError


def _fail(message):
    raise InternalInconsistencyError(f"certificate rejected: {message}")


def is_circuit(G: SignedGraph, edge_ids) -> bool:
    """True iff the edges form a single circuit (connected, every vertex of degree 2)."""
    ids = list(edge_ids)
    if not ids or len(set(ids)) != len(ids):
        return False
    es = [G.edge(i) for i in ids]
    deg = Counter()
    for e in es:
        deg[e.u] += 1
        deg[e.v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    H = G.edge_subgraph(ids)
    seen, stack = {H.vertices[0]}, [H.vertices[0]]
    while stack:
        x = stack.pop()
        for y in H.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(H)


def check_negative_circuit(G: SignedGraph, signature, edge_ids):
    sig = check_signature(G, signature)
    if not is_circuit(G, edge_ids):
        _fail(f"{sorted(edge_ids)} is not a circuit")
    if len(frozenset(edge_ids) & sig) % 2 == 0:
        _fail(f"circuit {sorted(edge_ids)} is positive")


def check_switch(G: SignedGraph, signature, U, expected):
    """``Σ Δ ∂(U)`` must equal ``expected``."""
    U = check_switch_set(G, U)
    got = check_signature(G, signature) ^ cut(G, U)
    if got != frozenset(expected):
        _fail("switch set does not produce the claimed signature")


def check_balance_certificate(G: SignedGraph, signature, cert):
    sig = check_signature(G, signature)
    if cert.balanced:
        check_switch(G, sig, cert.switch_set, frozenset())
    else:
        check_negative_circuit(G, sig, cert.circuit)


def check_signature_witness(G: SignedGraph, signature, witness, switch_set=None):
    """``witness`` must be a signature equivalent to ``Σ``; with ``switch_set`` the exact one."""
    sig = check_signature(G, signature)
    if switch_set is not None:
        check_switch(G, sig, switch_set, witness)
    elif signature_to_switch_set(G, sig, witness) is None:
        _fail("witness is not switching-equivalent to the signature")


def check_disjoint_circuits(G: SignedGraph, signature, witness):
    check_negative_circuit(G, signature, witness.first)
    check_negative_circuit(G, signature, witness.second)
    if witness.first & witness.second:
        _fail("circuits share an edge")


def check_equilibrated_cut(G: SignedGraph, gamma, witness):
    if witness.edge not in cut(G, witness.switch_set):
        _fail(f"edge {witness.edge!r} does not cross the cut")
    summary = cut_summary(G, gamma, witness.switch_set)
    if summary != witness.summary or not summary.equilibrated:
        _fail("cut is not equilibrated")


def check_critical_report(G: SignedGraph, signature, report):
    """Each claimed minimum signature must be equivalent to ``Σ``, of size ``index`` and contain its edge."""
    sig = check_signature(G, signature)
    if report.critical:
        if set(report.per_edge) != set(G.edge_ids):
            _fail("critical report does not cover every edge")
    seen = {}
    for e, s in report.per_edge.items():
        if e not in s or len(s) != report.index:
            _fail(f"witness for {e!r} is not an index-size signature through it")
        if s not in seen:
            seen[s] = signature_to_switch_set(G, sig, s) is not None
        if not seen[s]:
            _fail(f"witness for {e!r} is not switching-equivalent to the signature")


def check_decomposition(G: SignedGraph, signature, witness, index: int):
    parts = list(witness.parts)
    union = frozenset().union(*parts)
    if union != frozenset(G.edge_ids) or sum(len(p) for p in parts) != len(union):
        _fail("parts do not partition the edge set")
    if sum(witness.indices) != index:
        _fail("part indices do not add up")
