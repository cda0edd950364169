"""Exact frustration index.

Three independent routes compute ``l(G, Σ)``:

* :func:`frustration_deletion_oracle` tries edge subsets by increasing size
  (the definition; tiny graphs only),
* :func:`frustration_switch_enum` minimises ``|Σ Δ ∂(U)|`` over every switch
  set ``U`` of each component, with one vertex pinned,
* :func:`frustration_bnb` runs a branch-and-bound over the same two-state
  vertex variables.

Deleting a minimum set of edges that balances the graph leaves a signature,
so the switch-set formulation is exact and its minimisers are certificates.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import SignedGraph, canonical_key, check_signature, components, cut
from .exceptions import BudgetExceededError, PreconditionError

DEFAULT_ENUM_MAX_VERTICES = 24
DEFAULT_ORACLE_MAX_EDGES = 20
DEFAULT_SIGNATURE_CAP = 100_000
BUDGET_ENV = "SGFRUST_BUDGET"
_CHUNK_BITS = 20


def default_time_budget() -> float | None:
    """Seconds from ``$SGFRUST_BUDGET``, or ``None`` (unbounded)."""
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    try:
        value = float(raw)
    except ValueError:
        raise PreconditionError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None
    return value if value > 0 else None


@dataclass(frozen=True)
class FrustrationResult:
    """Frustration index with a witness minimum signature.

    ``witness == Σ Δ ∂(switch_set)`` and ``len(witness) == index`` whenever
    ``certified`` is true.  An uncertified result (time budget exhausted)
    only guarantees ``index >= l(G, Σ)``.
    """

    index: int
    witness: frozenset
    switch_set: frozenset
    certified: bool = True
    method: str = "enum"
    all_min_signatures: Optional[tuple] = None
    stats: dict = field(default_factory=dict, compare=False)


# -- oracle ------------------------------------------------------------------


def _balanced_after_deletion(vertices, edges, removed) -> bool:
    # parity union-find; independent of the balance module on purpose
    parent = {x: x for x in vertices}
    parity = {x: 0 for x in vertices}

    def find(x):
        p = 0
        root = x
        while parent[root] != root:
            p ^= parity[root]
            root = parent[root]
        return root, p

    for eid, u, v, neg in edges:
        if eid in removed:
            continue
        if u == v:
            if neg:
                return False
            continue
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv != neg:
                return False
        else:
            parent[ru] = rv
            parity[ru] = pu ^ pv ^ neg
    return True


def frustration_deletion_oracle(G: SignedGraph, signature=None, cap_edges: int = DEFAULT_ORACLE_MAX_EDGES) -> int:
    """Smallest number of edges whose deletion balances the graph (brute force)."""
    sig = check_signature(G, signature)
    if len(G.edges) > cap_edges:
        raise BudgetExceededError(
            f"deletion oracle limited to {cap_edges} edges, graph has {len(G.edges)}", cap=cap_edges
        )
    edges = [(e.id, e.u, e.v, 1 if e.id in sig else 0) for e in G.edges]
    ids = [e[0] for e in edges]
    for size in range(len(ids) + 1):
        for removed in itertools.combinations(ids, size):
            if _balanced_after_deletion(G.vertices, edges, set(removed)):
                return size
    raise AssertionError("deleting every edge always balances")


# -- shared helpers ----------------------------------------------------------


def _pair_weights(comp: SignedGraph, sig: frozenset, index: dict):
    """Collapse parallel edges: ``{(i, j): [positives, negatives]}`` and the negative-loop count."""
    weights: dict = {}
    neg_loops = 0
    for e in comp.edges:
        neg = e.id in sig
        if e.is_loop:
            neg_loops += neg
            continue
        i, j = index[e.u], index[e.v]
        key = (i, j) if i < j else (j, i)
        w = weights.setdefault(key, [0, 0])
        w[1 if neg else 0] += 1
    return weights, neg_loops


def _normalise(comp: SignedGraph, ones) -> frozenset:
    ones = frozenset(ones)
    if comp.vertices and comp.vertices[0] in ones:
        ones = frozenset(comp.vertices) - ones
    return ones


# -- exhaustive switch enumeration ------------------------------------------


def _enum_component(comp: SignedGraph, sig: frozenset, collect_all: bool, stats: dict):
    verts = comp.vertices
    n = len(verts)
    index = {x: i for i, x in enumerate(verts)}
    weights, neg_loops = _pair_weights(comp, sig, index)
    base = neg_loops + sum(q for _, q in weights.values())
    # vertex 0 is pinned outside U; free vertex i >= 1 is bit i-1 of the state
    pairs = [(i, j, p - q) for (i, j), (p, q) in sorted(weights.items()) if p != q]
    total = 1 << max(n - 1, 0)
    chunk = 1 << _CHUNK_BITS
    best = None
    best_states: list = []
    for start in range(0, total, chunk):
        states = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = [np.zeros(len(states), dtype=np.int8)]
        bits += [((states >> (i - 1)) & 1).astype(np.int8) for i in range(1, n)]
        cost = np.full(len(states), base, dtype=np.int32)
        for i, j, delta in pairs:
            cost += delta * (bits[i] ^ bits[j]).astype(np.int32)
        low = int(cost.min())
        if best is None or low < best:
            best = low
            best_states = []
        if low == best:
            if collect_all:
                best_states.extend(int(s) for s in states[np.flatnonzero(cost == low)])
            elif not best_states:
                best_states.append(int(states[int(np.argmin(cost))]))
    stats["states"] = stats.get("states", 0) + total

    def to_switch_set(state):
        return frozenset(verts[i] for i in range(1, n) if (state >> (i - 1)) & 1)

    sets = [to_switch_set(s) for s in best_states]
    return best, sets


def _component_signature(comp: SignedGraph, sig: frozenset, U) -> frozenset:
    local = sig & frozenset(comp.edge_ids)
    return local ^ cut(comp, U)


def frustration_switch_enum(
    G: SignedGraph,
    signature=None,
    collect_all: bool = False,
    max_vertices: int = DEFAULT_ENUM_MAX_VERTICES,
    signature_cap: int = DEFAULT_SIGNATURE_CAP,
) -> FrustrationResult:
    """Exact index by scanning all ``2^(n-1)`` switch sets of each component.

    With ``collect_all`` every distinct minimum signature is returned in
    ``all_min_signatures`` (sorted canonically).
    """
    sig = check_signature(G, signature)
    t0 = time.perf_counter()
    stats: dict = {"method": "enum"}
    comps = components(G)
    for comp in comps:
        if len(comp) > max_vertices:
            raise BudgetExceededError(
                f"component with {len(comp)} vertices exceeds the enumeration limit of {max_vertices}; "
                "use frustration_bnb",
                cap=max_vertices,
            )
    index = 0
    U_total: set = set()
    per_component = []
    for comp in comps:
        value, sets = _enum_component(comp, sig, collect_all, stats)
        index += value
        U_total |= sets[0]
        if collect_all:
            per_component.append(sorted({_component_signature(comp, sig, U) for U in sets}, key=_sig_key))
    witness = sig ^ cut(G, U_total)
    all_min = None
    if collect_all:
        count = 1
        for options in per_component:
            count *= len(options)
        if count > signature_cap:
            raise BudgetExceededError(f"{count} minimum signatures exceed the cap of {signature_cap}", cap=signature_cap)
        combined = {frozenset().union(*parts) for parts in itertools.product(*per_component)}
        all_min = tuple(sorted(combined, key=_sig_key))
    stats["elapsed"] = time.perf_counter() - t0
    stats["nodes"] = stats.get("states", 0)
    return FrustrationResult(index, witness, frozenset(U_total), True, "enum", all_min, stats)


def _sig_key(s) -> tuple:
    return (len(s), [canonical_key(i) for i in sorted(s, key=canonical_key)])


# -- branch and bound --------------------------------------------------------


class _Timeout(Exception):
    pass


class _Optimal(Exception):
    pass


class _BnB:
    """Branch-and-bound for one connected component.

    Vertices are ordered by descending degree (ties canonical).  The bound at
    a node adds, to the disagreements among decided vertices, the cheaper
    state of every undecided vertex against its decided neighbours and the
    exact index of the subgraph induced by the undecided suffix.  Those
    suffix indices come from solving the suffixes first, smallest to largest.
    """

    def __init__(self, comp: SignedGraph, sig: frozenset, deadline, stats: dict):
        self.comp = comp
        self.order = sorted(comp.vertices, key=lambda x: (-comp.degree(x), canonical_key(x)))
        self.n = len(self.order)
        index = {x: i for i, x in enumerate(self.order)}
        weights, self.neg_loops = _pair_weights(comp, sig, index)
        self.later = [[] for _ in range(self.n)]
        for (i, j), (p, q) in sorted(weights.items()):
            self.later[i].append((j, p, q))
        self.deadline = deadline
        self.stats = stats
        self.nodes = 0
        self.suffix_value = [0] * (self.n + 1)
        self.suffix_assign: list = [None] * (self.n + 1)

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 1023) == 0 and time.perf_counter() > self.deadline:
            raise _Timeout

    def _cost_of(self, k, assign) -> int:
        total = 0
        for i in range(k, self.n):
            bi = assign[i]
            for j, p, q in self.later[i]:
                total += p if bi != assign[j] else q
        return total

    def _greedy(self, k) -> list:
        assign = [0] * self.n
        c0 = [0] * self.n
        c1 = [0] * self.n
        for d in range(k, self.n):
            b = 0 if d == k or c0[d] <= c1[d] else 1
            assign[d] = b
            for j, p, q in self.later[d]:
                if b == 0:
                    c0[j] += q
                    c1[j] += p
                else:
                    c1[j] += q
                    c0[j] += p
        return assign

    def _local_search(self, k, assign) -> list:
        improved = True
        nbrs = [[] for _ in range(self.n)]
        for i in range(k, self.n):
            for j, p, q in self.later[i]:
                nbrs[i].append((j, p, q))
                nbrs[j].append((i, p, q))
        while improved:
            improved = False
            for d in range(k, self.n):
                gain = 0
                for j, p, q in nbrs[d]:
                    same = assign[d] == assign[j]
                    gain += (q - p) if same else (p - q)
                if gain > 0:
                    assign[d] ^= 1
                    improved = True
        return assign

    def solve_suffix(self, k):
        n = self.n
        floor = self.suffix_value[k + 1]
        if self.suffix_assign[k + 1] is not None:
            seed = list(self.suffix_assign[k + 1])
            c = [0, 0]
            for j, p, q in self.later[k]:
                c[0] += q if seed[j] == 0 else p
                c[1] += q if seed[j] == 1 else p
            seed[k] = 0 if c[0] <= c[1] else 1
        else:
            seed = [0] * n
        candidates = [seed, self._local_search(k, self._greedy(k))]
        best_assign = min(candidates, key=lambda a: self._cost_of(k, a))
        best = self._cost_of(k, best_assign)
        if best > floor:
            c0 = [0] * n
            c1 = [0] * n
            assign = [0] * n
            state = {"best": best, "assign": best_assign}

            def dfs(d, cost, summin):
                self._tick()
                if d == n:
                    if cost < state["best"]:
                        state["best"] = cost
                        state["assign"] = list(assign)
                        if cost == floor:
                            raise _Optimal
                    return
                if cost + summin + self.suffix_value[d] >= state["best"]:
                    return
                own = min(c0[d], c1[d])
                choices = (0,) if d == k else ((0, 1) if c0[d] <= c1[d] else (1, 0))
                for b in choices:
                    step = c0[d] if b == 0 else c1[d]
                    delta = 0
                    for j, p, q in self.later[d]:
                        before = c0[j] if c0[j] < c1[j] else c1[j]
                        if b == 0:
                            c0[j] += q
                            c1[j] += p
                        else:
                            c1[j] += q
                            c0[j] += p
                        delta += (c0[j] if c0[j] < c1[j] else c1[j]) - before
                    assign[d] = b
                    dfs(d + 1, cost + step, summin - own + delta)
                    for j, p, q in self.later[d]:
                        if b == 0:
                            c0[j] -= q
                            c1[j] -= p
                        else:
                            c1[j] -= q
                            c0[j] -= p

            try:
                dfs(k, 0, 0)
            except _Optimal:
                pass
            except _Timeout:
                self.partial = (k, state["best"], state["assign"])
                raise
            best, best_assign = state["best"], state["assign"]
        self.suffix_value[k] = best
        self.suffix_assign[k] = best_assign

    def run(self):
        for k in range(self.n - 1, -1, -1):
            self.solve_suffix(k)
        return self.suffix_value[0], self.suffix_assign[0]

    def fallback(self):
        """Best full assignment known after a timeout."""
        candidates = [self._local_search(0, self._greedy(0))]
        k, _, assign = getattr(self, "partial", (None, None, None))
        if assign is not None:
            full = list(assign)
            # extend the partial suffix solution greedily towards the front
            for d in range(k - 1, -1, -1):
                cost = [0, 0]
                for j, p, q in self.later[d]:
                    cost[0] += q if full[j] == 0 else p
                    cost[1] += q if full[j] == 1 else p
                full[d] = 0 if cost[0] <= cost[1] else 1
            candidates.append(self._local_search(0, full))
        best = min(candidates, key=lambda a: self._cost_of(0, a))
        return self._cost_of(0, best), best


def frustration_bnb(G: SignedGraph, signature=None, time_budget: float | None = None) -> FrustrationResult:
    """Exact index by branch-and-bound.

    If ``time_budget`` seconds run out, the best incumbent is returned with
    ``certified=False``; its index is then only an upper bound.
    """
    sig = check_signature(G, signature)
    if time_budget is None:
        time_budget = default_time_budget()
    t0 = time.perf_counter()
    deadline = None if time_budget is None else t0 + time_budget
    stats: dict = {"method": "bnb"}
    index = 0
    certified = True
    U_total: set = set()
    nodes = 0
    for comp in components(G):
        solver = _BnB(comp, sig, deadline, stats)
        try:
            value, assign = solver.run()
        except _Timeout:
            value, assign = solver.fallback()
            certified = False
        nodes += solver.nodes
        ones = {solver.order[i] for i in range(solver.n) if assign[i]}
        U_total |= _normalise(comp, ones)
        index += value + solver.neg_loops
    witness = sig ^ cut(G, U_total)
    if len(witness) != index:
        raise AssertionError("branch-and-bound witness does not match its value")
    stats["nodes"] = nodes
    stats["elapsed"] = time.perf_counter() - t0
    return FrustrationResult(index, witness, frozenset(U_total), certified, "bnb", None, stats)


# -- front doors -------------------------------------------------------------


def frustration(
    G: SignedGraph,
    signature=None,
    method: str = "auto",
    collect_all: bool = False,
    time_budget: float | None = None,
    max_vertices: int = DEFAULT_ENUM_MAX_VERTICES,
) -> FrustrationResult:
    """Dispatch to a solver.

    ``method`` is ``"enum"``, ``"bnb"``, ``"oracle"`` or ``"auto"`` (switch
    enumeration when every component fits, branch-and-bound otherwise).
    """
    sig = check_signature(G, signature)
    if method == "auto":
        fits = all(len(c) <= max_vertices for c in components(G))
        method = "enum" if fits or collect_all else "bnb"
    if method == "enum":
        return frustration_switch_enum(G, sig, collect_all=collect_all, max_vertices=max_vertices)
    if method == "bnb":
        if collect_all:
            raise PreconditionError("branch-and-bound does not enumerate all minimum signatures")
        return frustration_bnb(G, sig, time_budget=time_budget)
    if method == "oracle":
        t0 = time.perf_counter()
        value = frustration_deletion_oracle(G, sig)
        exact = frustration_switch_enum(G, sig, collect_all=collect_all, max_vertices=max_vertices)
        if exact.index != value:
            raise AssertionError(f"oracle {value} disagrees with enumeration {exact.index}")
        return FrustrationResult(
            value, exact.witness, exact.switch_set, True, "oracle", exact.all_min_signatures,
            {"method": "oracle", "elapsed": time.perf_counter() - t0},
        )
    raise PreconditionError(f"unknown method {method!r}")


def frustration_index(G: SignedGraph, signature=None, **kwargs) -> int:
    result = frustration(G, signature, **kwargs)
    if not result.certified:
        raise BudgetExceededError("frustration index not certified within the time budget")
    return result.index


def all_min_signatures(
    G: SignedGraph, signature=None, cap: int = DEFAULT_SIGNATURE_CAP, max_vertices: int = DEFAULT_ENUM_MAX_VERTICES
) -> tuple:
    """Every minimum signature ``Σ Δ ∂(U)``, deduplicated and canonically sorted."""
    result = frustration_switch_enum(
        G, signature, collect_all=True, max_vertices=max_vertices, signature_cap=cap
    )
    return result.all_min_signatures
