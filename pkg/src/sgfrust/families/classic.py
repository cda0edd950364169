"""Small named signed graphs: loops, doubled circuits, antibalanced cliques and wheels,
projective cubes, the octahedron and two signatures of the Petersen graph."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..core import Edge, Sign, SignedGraph, canonical_sorted, cut
from ..exceptions import InternalInconsistencyError, PreconditionError

NEG = Sign.NEGATIVE
POS = Sign.POSITIVE


def _need(cond: bool, message: str):
    if not cond:
        raise PreconditionError(message)


def neg_loops(k: int):
    """``-kC1``: one vertex carrying ``k`` negative loops."""
    _need(k >= 1, "neg_loops needs k >= 1")
    G = SignedGraph(["v"], [Edge(f"l{i}", "v", "v", NEG) for i in range(1, k + 1)])
    return G, G.signature


def plus_minus(n: int):
    """``±Cn``: a circuit of length ``n`` with every edge doubled by one of opposite sign."""
    _need(n >= 1, "plus_minus needs n >= 1")
    vs = [f"v{i}" for i in range(n)]
    es = []
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        es += [Edge(f"p{i}", a, b, POS), Edge(f"n{i}", a, b, NEG)]
    G = SignedGraph(vs, es)
    return G, G.signature


def anti_complete(n: int):
    """``-Kn``: the complete graph with every edge negative."""
    _need(n >= 2, "anti_complete needs n >= 2")
    vs = [f"v{i}" for i in range(1, n + 1)]
    es = [Edge(f"{a}{b}", a, b, NEG) for a, b in combinations(vs, 2)]
    G = SignedGraph(vs, es)
    return G, G.signature


def anti_wheel(k: int):
    """``-W_{2k+1}``: hub ``h``, rim ``c0 .. c2k``, all edges negative."""
    _need(k >= 1, "anti_wheel needs k >= 1")
    m = 2 * k + 1
    rim = [f"c{i}" for i in range(m)]
    es = [Edge(f"s{i}", "h", rim[i], NEG) for i in range(m)]
    es += [Edge(f"r{i}", rim[i], rim[(i + 1) % m], NEG) for i in range(m)]
    G = SignedGraph(["h"] + rim, es)
    return G, G.signature


def projective_cube(k: int):
    """Hypercube ``Q_k`` (positive) plus the antipodal perfect matching (negative).

    Vertices are bit strings; cube edges are ``a-b`` and antipodal edges
    ``a<bits>`` named after their lexicographically smaller end.
    """
    _need(k >= 1, "projective_cube needs k >= 1")
    vs = [format(i, f"0{k}b") for i in range(2**k)]
    es = []
    for i in range(2**k):
        for bit in range(k):
            j = i ^ (1 << (k - 1 - bit))
            if i < j:
                es.append(Edge(f"{vs[i]}-{vs[j]}", vs[i], vs[j], POS))
        j = i ^ (2**k - 1)
        if i < j:
            es.append(Edge(f"a{vs[i]}", vs[i], vs[j], NEG))
    G = SignedGraph(vs, es)
    return G, G.signature


def projective_cube_disjoint_signatures(k: int) -> list:
    """``[Σ, B_1, ..., B_k]`` with ``B_i = ∂(U_i) Δ Σ`` and ``U_i`` the vertices whose bit ``i`` is 0."""
    G, sig = projective_cube(k)
    out = [sig]
    for i in range(k):
        U = [v for v in G.vertices if v[i] == "0"]
        out.append(cut(G, U) ^ sig)
    size = 2 ** (k - 1)
    for a, b in combinations(out, 2):
        if a & b:
            raise InternalInconsistencyError("projective cube signatures overlap")
    if any(len(s) != size for s in out):
        raise InternalInconsistencyError("projective cube signature of unexpected size")
    return out


def octahedron_anti():
    """``-Oct``: the octahedron (``K6`` minus a perfect matching), all edges negative."""
    vs = [f"o{i}" for i in range(6)]
    missing = {frozenset(("o0", "o1")), frozenset(("o2", "o3")), frozenset(("o4", "o5"))}
    es = [Edge(f"{a}{b}", a, b, NEG) for a, b in combinations(vs, 2) if frozenset((a, b)) not in missing]
    G = SignedGraph(vs, es)
    return G, G.signature


def _petersen_graph():
    from .walls import generate_wall_prime

    W, wsig, _ = generate_wall_prime(3)
    names = {v: f"p{i}" for i, v in enumerate(W.vertices)}
    es = []
    for e in W.edges:
        a, b = canonical_sorted((names[e.u], names[e.v]))
        es.append(Edge(f"{a}{b}", a, b, e.sign))
    return SignedGraph(names.values(), es)


@lru_cache(maxsize=None)
def _petersen_sigma2():
    return _petersen_graph()


def petersen_sigma2():
    """The Petersen graph with the signature coming from the smallest ``E'`` wall."""
    G = _petersen_sigma2()
    return G, G.signature


@lru_cache(maxsize=None)
def _petersen_sigma1():
    from ..criticality import is_critical
    from ..frustration import frustration
    from ..structure.circuits import two_edge_disjoint_negative_circuits

    P = _petersen_sigma2()
    for trial in combinations(P.edge_ids, 3):
        sig = frozenset(trial)
        if frustration(P, sig).index != 3:
            continue
        if two_edge_disjoint_negative_circuits(P, sig) is None:
            continue
        if is_critical(P, sig).critical:
            return P.with_signature(sig)
    raise InternalInconsistencyError("no 3-critical Petersen signature with disjoint negative circuits")


def petersen_sigma1():
    """The first 3-signature of the Petersen graph (canonical edge order) that is
    3-critical and carries two edge-disjoint negative circuits."""
    G = _petersen_sigma1()
    return G, G.signature
