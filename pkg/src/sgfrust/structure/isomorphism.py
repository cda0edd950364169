"""Switching isomorphism of small signed multigraphs."""

from __future__ import annotations

from collections import Counter, defaultdict

from ..core import SignedGraph, check_signature
from ..exceptions import BudgetExceededError

DEFAULT_ISO_MAX_VERTICES = 14


def _profile(G: SignedGraph, sig: frozenset):
    mult = defaultdict(int)
    neg = defaultdict(int)
    loops = Counter()
    neg_loops = Counter()
    for e in G.edges:
        if e.is_loop:
            loops[e.u] += 1
            neg_loops[e.u] += e.id in sig
            continue
        key = frozenset((e.u, e.v))
        mult[key] += 1
        neg[key] += e.id in sig
    return mult, neg, loops, neg_loops


def _vertex_invariant(G, x, loops, neg_loops):
    nbr_degrees = tuple(sorted(G.degree(y) for y in G.neighbors(x)))
    return G.degree(x), loops[x], neg_loops[x], len(G.neighbors(x)), nbr_degrees


def _switching_compatible(phi, mult1, neg1, neg2) -> bool:
    """Solve for a switch set of the second graph that makes ``phi`` sign-preserving."""
    parent, parity = {}, {}

    def find(x):
        parent.setdefault(x, x)
        parity.setdefault(x, 0)
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    for key, t in mult1.items():
        a, b = tuple(key)
        n1 = neg1[key]
        n2 = neg2[frozenset((phi[a], phi[b]))]
        same = n1 == n2
        flipped = n1 == t - n2
        if same and flipped:
            continue
        if not same and not flipped:
            return False
        want = 0 if same else 1
        (ra, pa), (rb, pb) = find(phi[a]), find(phi[b])
        if ra == rb:
            if pa ^ pb != want:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ want
    return True


def find_switch_isomorphism(
    G1: SignedGraph, sig1, G2: SignedGraph, sig2, max_vertices: int = DEFAULT_ISO_MAX_VERTICES
) -> dict | None:
    """Vertex map ``φ: V(G1) → V(G2)`` carrying ``Σ1`` into the switching class of ``Σ2``.

    Returns ``None`` when no such map exists.  Raises
    :class:`BudgetExceededError` above ``max_vertices`` vertices (after the
    cheap invariants have failed to separate the graphs).
    """
    s1 = check_signature(G1, sig1)
    s2 = check_signature(G2, sig2)
    if len(G1) != len(G2) or len(G1.edges) != len(G2.edges):
        return None
    m1, n1, l1, nl1 = _profile(G1, s1)
    m2, n2, l2, nl2 = _profile(G2, s2)
    inv1 = {x: _vertex_invariant(G1, x, l1, nl1) for x in G1.vertices}
    inv2 = {x: _vertex_invariant(G2, x, l2, nl2) for x in G2.vertices}
    if Counter(inv1.values()) != Counter(inv2.values()):
        return None
    if sorted(m1.values()) != sorted(m2.values()):
        return None
    if len(G1) > max_vertices:
        raise BudgetExceededError(f"switching isomorphism is capped at {max_vertices} vertices", cap=max_vertices)

    # visit G1 in BFS order from a rarest-invariant vertex so each step is constrained
    rarity = Counter(inv1.values())
    order = []
    placed = set()
    for root in sorted(G1.vertices, key=lambda x: rarity[inv1[x]]):
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in G1.neighbors(x):
                if y not in placed:
                    placed.add(y)
                    queue.append(y)
    candidates = {x: [y for y in G2.vertices if inv2[y] == inv1[x]] for x in G1.vertices}
    phi: dict = {}
    used: set = set()

    def consistent(x, y) -> bool:
        for a, b in phi.items():
            if m1.get(frozenset((x, a)), 0) != m2.get(frozenset((y, b)), 0):
                return False
        return True

    def extend(i):
        if i == len(order):
            return _switching_compatible(phi, m1, n1, n2)
        x = order[i]
        for y in candidates[x]:
            if y in used or not consistent(x, y):
                continue
            phi[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del phi[x]
            used.discard(y)
        return False

    return dict(phi) if extend(0) else None


def switch_isomorphic(G1: SignedGraph, sig1, G2: SignedGraph, sig2,
                      max_vertices: int = DEFAULT_ISO_MAX_VERTICES) -> bool:
    return find_switch_isomorphism(G1, sig1, G2, sig2, max_vertices) is not None
