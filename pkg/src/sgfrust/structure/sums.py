"""2- and 3-edge sums of signed graphs."""

from __future__ import annotations

from ..core import Edge, Sign, SignedGraph, canonical_key, check_signature, disjoint_union
from ..exceptions import PreconditionError

PREFIXES = ("a.", "b.")


def _joined(H1, s1, H2, s2, prefixes, drop1, drop2, drop_vertices, joins):
    p1, p2 = prefixes
    G = disjoint_union(H1.with_signature(s1), H2.with_signature(s2), prefixes=prefixes)
    drop_e = {p1 + e for e in drop1} | {p2 + e for e in drop2}
    vs = [x for x in G.vertices if x not in drop_vertices]
    es = [e for e in G.edges if e.id not in drop_e]
    es += [Edge(f"j{i + 1}", a, b, Sign.POSITIVE) for i, (a, b) in enumerate(joins)]
    out = SignedGraph(vs, es)
    return out, out.signature


def edge_sum_2(H1: SignedGraph, gamma1, e1: str, H2: SignedGraph, gamma2, e2: str,
               cross: bool = False, prefixes=PREFIXES):
    """Delete the positive edges ``v1w1`` and ``v2w2`` and add positive ``v1v2``, ``w1w2``.

    Vertex and edge names get the ``prefixes``; the new edges are ``j1`` and
    ``j2``.  ``cross=True`` joins ``v1w2`` and ``w1v2`` instead.
    """
    s1, s2 = check_signature(H1, gamma1), check_signature(H2, gamma2)
    a, b = H1.edge(e1), H2.edge(e2)
    for e, s in ((a, s1), (b, s2)):
        if e.id in s:
            raise PreconditionError(f"edge {e.id!r} is negative")
        if e.is_loop:
            raise PreconditionError(f"edge {e.id!r} is a loop")
    p1, p2 = prefixes
    v2, w2 = (b.v, b.u) if cross else (b.u, b.v)
    joins = [(p1 + a.u, p2 + v2), (p1 + a.v, p2 + w2)]
    return _joined(H1, s1, H2, s2, prefixes, [e1], [e2], set(), joins)


def _trivalent_neighbours(H: SignedGraph, sig: frozenset, u) -> list:
    inc = H.incident(u)
    if H.degree(u) != 3 or any(e.is_loop for e in inc):
        raise PreconditionError(f"vertex {u!r} must have degree 3 without loops")
    if any(e.id in sig for e in inc):
        raise PreconditionError(f"vertex {u!r} has a negative incident edge")
    return sorted((e.other(u) for e in inc), key=canonical_key)


def edge_sum_3(H1: SignedGraph, gamma1, u1, H2: SignedGraph, gamma2, u2,
               pairing=None, prefixes=PREFIXES):
    """Delete trivalent ``u1``, ``u2`` and join their neighbours by positive edges.

    Neighbours are matched in canonical order; ``pairing`` (a permutation of
    ``(0, 1, 2)``) reorders the second triple.
    """
    s1, s2 = check_signature(H1, gamma1), check_signature(H2, gamma2)
    n1 = _trivalent_neighbours(H1, s1, u1)
    n2 = _trivalent_neighbours(H2, s2, u2)
    if pairing is not None:
        if sorted(pairing) != [0, 1, 2]:
            raise PreconditionError("pairing must be a permutation of (0, 1, 2)")
        n2 = [n2[i] for i in pairing]
    p1, p2 = prefixes
    joins = [(p1 + a, p2 + b) for a, b in zip(n1, n2)]
    drop1 = [e.id for e in H1.incident(u1)]
    drop2 = [e.id for e in H2.incident(u2)]
    return _joined(H1, s1, H2, s2, prefixes, drop1, drop2, {p1 + u1, p2 + u2}, joins)
