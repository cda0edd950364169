"""Subdividing multiedges, suppressing vertices, and classifying 1- and 2-critical graphs."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Edge, Sign, SignedGraph, canonical_sorted, check_signature, disjoint_union
from ..exceptions import InternalInconsistencyError, PreconditionError


class NotSuppressibleError(PreconditionError):
    """The vertex cannot be suppressed."""


@dataclass(frozen=True)
class ClassificationResult:
    index: int
    archetype: str
    sequence: tuple
    graph: SignedGraph
    signature: frozenset


def _fresh(name: str, taken) -> str:
    if name not in taken:
        return name
    i = 2
    while f"{name}.{i}" in taken:
        i += 1
    return f"{name}.{i}"


def _rebuild(G: SignedGraph, sig: frozenset, drop_vertices=(), drop_edges=(), add_vertices=(), add_edges=()):
    drop_vertices, drop_edges = set(drop_vertices), set(drop_edges)
    vs = [x for x in G.vertices if x not in drop_vertices] + list(add_vertices)
    es = [e for e in G.edges if e.id not in drop_edges] + list(add_edges)
    H = SignedGraph(vs, es)
    new_sig = (sig - drop_edges) | frozenset(e.id for e in add_edges if e.sign is Sign.NEGATIVE)
    return H.with_signature(new_sig), new_sig


def subdivide_multiedge(G: SignedGraph, signature, x, y, new_vertex=None):
    """Replace the ``t`` edges between ``x`` and ``y`` (all of sign ``s``) by a new vertex.

    The new vertex ``v`` gets ``t`` positive edges to ``x`` and ``t`` edges of
    sign ``s`` to ``y``; edge ``e`` becomes ``e.a`` (to ``x``) and ``e.b`` (to
    ``y``).  For a set of loops at ``x`` both halves go to ``x``.
    """
    sig = check_signature(G, signature)
    if not (G.has_vertex(x) and G.has_vertex(y)):
        raise PreconditionError(f"unknown vertices {x!r}, {y!r}")
    multi = [e for e in G.incident(x) if e.is_loop] if x == y else list(G.edges_between(x, y))
    if not multi:
        raise PreconditionError(f"no edges between {x!r} and {y!r}")
    signs = {e.id in sig for e in multi}
    if len(signs) != 1:
        raise PreconditionError(f"edges between {x!r} and {y!r} have mixed signs")
    s = Sign.NEGATIVE if signs.pop() else Sign.POSITIVE
    v = new_vertex if new_vertex is not None else _fresh(f"{x}_{y}", set(G.vertices))
    if G.has_vertex(v):
        raise PreconditionError(f"vertex {v!r} already exists")
    taken = set(G.edge_ids)
    added = []
    for e in multi:
        a = _fresh(f"{e.id}.a", taken)
        taken.add(a)
        b = _fresh(f"{e.id}.b", taken)
        taken.add(b)
        added += [Edge(a, v, x, Sign.POSITIVE), Edge(b, v, y, s)]
    return _rebuild(G, sig, drop_edges=[e.id for e in multi], add_vertices=[v], add_edges=added)


def _merged_id(a: str, b: str, taken) -> str:
    if a.endswith(".a") and b.endswith(".b") and a[:-2] == b[:-2]:
        return _fresh(a[:-2], taken)
    return _fresh(f"{a}_{b}", taken)


def _suppression_plan(G: SignedGraph, sig: frozenset, v):
    """New edges ``(id, x, y, sign)`` replacing ``v``, or a reason string."""
    inc = G.incident(v)
    if not inc:
        return "isolated vertex"
    if any(e.is_loop for e in inc):
        return "vertex carries a loop"
    nbrs = canonical_sorted(G.neighbors(v))
    taken = set(G.edge_ids) - {e.id for e in inc}
    out = []
    if len(nbrs) == 2:
        x, y = nbrs
        ex, ey = G.edges_between(v, x), G.edges_between(v, y)
        if len(ex) != len(ey):
            return "unequal multiplicities"
        sx, sy = {e.id in sig for e in ex}, {e.id in sig for e in ey}
        if len(sx) != 1 or len(sy) != 1:
            return "a side has mixed signs"
        sign = Sign.NEGATIVE if sx.pop() != sy.pop() else Sign.POSITIVE
        for a, b in zip(ex, ey):
            eid = _merged_id(a.id, b.id, taken)
            taken.add(eid)
            out.append((eid, x, y, sign))
        return out
    if len(nbrs) == 1:
        (x,) = nbrs
        pos = [e for e in inc if e.id not in sig]
        neg = [e for e in inc if e.id in sig]
        if len(inc) % 2:
            return "odd multiplicity"
        if pos and neg:
            if len(pos) != len(neg):
                return "a side has mixed signs"
            pairs, sign = zip(pos, neg), Sign.NEGATIVE
        else:
            same = pos or neg
            half = len(same) // 2
            pairs, sign = zip(same[:half], same[half:]), Sign.POSITIVE
        for a, b in pairs:
            eid = _merged_id(*sorted((a.id, b.id), key=lambda i: (not i.endswith(".a"), i)), taken)
            taken.add(eid)
            out.append((eid, x, x, sign))
        return out
    return f"{len(nbrs)} neighbours"


def suppress_vertex(G: SignedGraph, signature, v):
    """Inverse of :func:`subdivide_multiedge`.

    ``v`` must have two neighbours joined to it by equally many edges, each
    side of one sign, or a single neighbour joined by ``2t`` edges that split
    into two signed halves; in the latter case the result has ``t`` loops.
    """
    sig = check_signature(G, signature)
    if not G.has_vertex(v):
        raise PreconditionError(f"unknown vertex {v!r}")
    plan = _suppression_plan(G, sig, v)
    if isinstance(plan, str):
        raise NotSuppressibleError(f"cannot suppress {v!r}: {plan}")
    added = [Edge(i, x, y, s) for i, x, y, s in plan]
    return _rebuild(G, sig, drop_vertices=[v], drop_edges=[e.id for e in G.incident(v)], add_edges=added)


def suppressible(G: SignedGraph, signature, v) -> bool:
    sig = check_signature(G, signature)
    return not isinstance(_suppression_plan(G, sig, v), str)


def irreducible(G: SignedGraph, signature=None) -> bool:
    sig = check_signature(G, signature)
    if len(G) == 1:
        return True
    return not any(suppressible(G, sig, v) for v in G.vertices)


def reduction_sequence(G: SignedGraph, signature=None):
    """Suppress the first suppressible vertex until irreducible.

    Returns ``(H, Γ, steps)`` with ``steps`` the suppressed vertices in order.
    """
    H, sig = G, check_signature(G, signature)
    steps = []
    while len(H) > 1:
        v = next((x for x in H.vertices if suppressible(H, sig, x)), None)
        if v is None:
            break
        H, sig = suppress_vertex(H, sig, v)
        steps.append(v)
    return H, sig, tuple(steps)


def reduce_to_irreducible(G: SignedGraph, signature=None, verify: bool = True):
    """Suppress until irreducible; with ``verify`` the index and criticality are rechecked."""
    sig = check_signature(G, signature)
    H, hsig, _ = reduction_sequence(G, sig)
    if verify:
        from ..criticality import is_critical

        before, after = is_critical(G, sig), is_critical(H, hsig)
        if (before.index, before.critical) != (after.index, after.critical):
            raise InternalInconsistencyError("suppression changed the index or criticality")
    return H, hsig


def _archetypes(index: int):
    from ..families.classic import anti_complete, neg_loops

    c1 = neg_loops(1)[0]
    if index == 1:
        return [("-C1", c1)]
    return [
        ("-C1+-C1", disjoint_union(c1, c1)),
        ("-2C1", neg_loops(2)[0]),
        ("-K4", anti_complete(4)[0]),
    ]


def classify_low_critical(G: SignedGraph, signature=None) -> ClassificationResult:
    """Identify the irreducible archetype of a 1- or 2-critical graph."""
    from ..criticality import is_critical
    from .isomorphism import switch_isomorphic

    sig = check_signature(G, signature)
    report = is_critical(G, sig)
    if not report.critical or report.index not in (1, 2):
        raise PreconditionError("classification needs a critical graph of index 1 or 2")
    G = G.without_isolated_vertices()
    H, hsig, steps = reduction_sequence(G, sig)
    for name, A in _archetypes(report.index):
        if switch_isomorphic(H, hsig, A, A.signature):
            return ClassificationResult(report.index, name, steps, H, hsig)
    raise InternalInconsistencyError(
        f"irreducible {report.index}-critical graph with {len(H)} vertices matches no archetype"
    )
