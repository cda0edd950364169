import pytest

from sgfrust import (
    BudgetExceededError,
    PreconditionError,
    build_graph,
    disjoint_union,
    frustration_index,
    generate,
    is_critical,
    switch,
)
from sgfrust.structure import (
    NotSuppressibleError,
    classify_low_critical,
    cyclic_edge_connectivity,
    decompose_exhaustive,
    edge_sum_2,
    edge_sum_3,
    find_switch_isomorphism,
    in_s_star,
    irreducible,
    reduce_to_irreducible,
    reduction_sequence,
    subdivide_multiedge,
    suppress_vertex,
    suppressible,
    switch_isomorphic,
    trivially_decomposable,
    two_edge_disjoint_negative_circuits,
    verify_s_star_structure,
)
from sgfrust.verify import check_decomposition, check_disjoint_circuits

from oracles import cyclic_edge_connectivity_brute, disjoint_negative_circuits_brute


def pair(kind, k=None):
    G, sig, _ = generate(kind, k)
    return G, sig


# disjoint negative circuits


@pytest.mark.parametrize(
    "key,expected",
    [
        (("anti_complete", 4), False),
        (("anti_complete", 5), True),
        (("neg_loops", 2), True),
        (("plus_minus", 2), True),
        (("plus_minus", 3), True),
        (("anti_wheel", 1), False),
        (("petersen_sigma1", None), True),
        (("petersen_sigma2", None), False),
    ],
)
def test_disjoint_negative_circuits(key, expected):
    G, sig, _ = generate(*key)
    w = two_edge_disjoint_negative_circuits(G, sig)
    assert (w is not None) == expected == disjoint_negative_circuits_brute(G, sig)
    if w is not None:
        check_disjoint_circuits(G, sig, w)


def test_disjoint_search_cap():
    G, sig, _ = generate("escher_wall", 4)
    with pytest.raises(BudgetExceededError):
        two_edge_disjoint_negative_circuits(G, sig, cap=5)


def test_in_s_star_requires_critical():
    G = build_graph(["a", "b"], [("n", "a", "b", "-"), ("p", "a", "b", "+"), ("q", "a", "b", "+")])
    with pytest.raises(PreconditionError):
        in_s_star(G)


def test_in_s_star_on_fixtures():
    assert in_s_star(*pair("anti_complete", 4))
    assert not in_s_star(*pair("anti_complete", 5))
    assert in_s_star(*pair("petersen_sigma2"))


# switching isomorphism


def test_relabelled_switched_copy_is_isomorphic():
    G, sig, _ = generate("anti_wheel", 3)
    names = {x: f"z{i}" for i, x in enumerate(reversed(G.vertices))}
    H = build_graph(names.values(), [(e.id, names[e.u], names[e.v], e.sign) for e in G.edges])
    hsig = switch(H, H.signature, {"z0", "z3"})
    phi = find_switch_isomorphism(G, sig, H, hsig)
    assert phi is not None and set(phi.values()) == set(H.vertices)


def test_isomorphism_distinguishes_signatures():
    G, _, _ = generate("anti_complete", 4)
    assert not switch_isomorphic(G, frozenset(), G, G.signature)
    assert switch_isomorphic(G, G.signature, G, frozenset({"v1v2", "v3v4"}))


def test_petersen_fixtures_are_not_switch_isomorphic():
    P1, s1, _ = generate("petersen_sigma1")
    P2, s2, _ = generate("petersen_sigma2")
    assert not switch_isomorphic(P1, s1, P2, s2)


def test_isomorphism_size_cap():
    G, sig, _ = generate("escher_wall", 5)
    with pytest.raises(BudgetExceededError):
        find_switch_isomorphism(G, sig, G, sig, max_vertices=10)


# subdivision and suppression


def test_subdivide_then_suppress_round_trip():
    G, sig, _ = generate("anti_complete", 4)
    H, hsig = subdivide_multiedge(G, sig, "v1", "v2")
    assert "v1_v2" in H.vertices and {"v1v2.a", "v1v2.b"} <= set(H.edge_ids)
    assert H.edge("v1v2.a").id not in hsig and "v1v2.b" in hsig
    back, bsig = suppress_vertex(H, hsig, "v1_v2")
    assert back == G and bsig == sig


def test_subdivide_loops():
    G, sig, _ = generate("neg_loops", 2)
    H, hsig = subdivide_multiedge(G, sig, "v", "v")
    assert len(H) == 2 and len(H.edges) == 4 and len(hsig) == 2
    assert frustration_index(H, hsig) == 2
    back, bsig = suppress_vertex(H, hsig, "v_v")
    assert sorted(back.edge_ids) == ["l1", "l2"] and bsig == sig


def test_subdivide_rejects_mixed_signs():
    G, sig, _ = generate("plus_minus", 2)
    with pytest.raises(PreconditionError):
        subdivide_multiedge(G, sig, "v0", "v1")


def test_suppression_refusals():
    G, sig, _ = generate("anti_complete", 4)
    assert not suppressible(G, sig, "v1")
    with pytest.raises(NotSuppressibleError):
        suppress_vertex(G, sig, "v1")
    assert irreducible(G, sig)


def test_reduction_sequence_of_double_subdivision():
    G, sig, _ = generate("anti_complete", 4)
    H, hsig = subdivide_multiedge(G, sig, "v1", "v2")
    H, hsig = subdivide_multiedge(H, hsig, "v3", "v4")
    R, rsig, steps = reduction_sequence(H, hsig)
    assert len(steps) == 2 and R == G
    assert reduce_to_irreducible(H, hsig)[0] == G


@pytest.mark.parametrize(
    "builder,archetype",
    [
        (lambda: pair("anti_complete", 3), "-C1"),
        (lambda: pair("neg_loops", 1), "-C1"),
        (lambda: pair("plus_minus", 2), "-2C1"),
        (lambda: pair("neg_loops", 2), "-2C1"),
        (lambda: pair("anti_complete", 4), "-K4"),
        (lambda: (lambda G: (G, G.signature))(disjoint_union(generate("anti_complete", 3).graph,
                                                            generate("neg_loops", 1).graph)), "-C1+-C1"),
    ],
)
def test_classify_low_critical(builder, archetype):
    G, sig = builder()
    assert classify_low_critical(G, sig).archetype == archetype


def test_classify_subdivided_k4():
    G, sig, _ = generate("anti_complete", 4)
    H, hsig = subdivide_multiedge(G, sig, "v1", "v3")
    H, hsig = subdivide_multiedge(H, hsig, "v1_v3", "v3")
    res = classify_low_critical(H, hsig)
    assert res.archetype == "-K4" and len(res.sequence) == 2


def test_classify_rejects_index_three():
    G, sig, _ = generate("neg_loops", 3)
    with pytest.raises(PreconditionError):
        classify_low_critical(G, sig)


# sums


def cycle(n, prefix="c"):
    vs = [f"{prefix}{i}" for i in range(n)]
    return build_graph(vs, [(f"{prefix}e{i}", vs[i], vs[(i + 1) % n], "+") for i in range(n)])


def theta():
    # two branch vertices joined by three paths of length two
    es = [(f"t{i}{j}", b, f"m{i}", "+") for i in range(3) for j, b in enumerate(("s", "t"))]
    return build_graph(["s", "t", "m0", "m1", "m2"], es)


def test_edge_sum_2_with_balanced_circuit_is_critical():
    G, _, _ = generate("anti_complete", 4)
    sig = frozenset({"v1v2", "v3v4"})
    C = cycle(4)
    S, ssig = edge_sum_2(G, sig, "v1v3", C, frozenset(), "ce0")
    assert len(S) == 8 and len(S.edges) == 10 and {"j1", "j2"} <= set(S.edge_ids)
    report = is_critical(S, ssig)
    assert report.critical and report.index == 2
    assert two_edge_disjoint_negative_circuits(S, ssig) is None


def test_edge_sum_2_with_balanced_k4_is_not_critical():
    G, _, _ = generate("anti_complete", 4)
    sig = frozenset({"v1v2", "v3v4"})
    S, ssig = edge_sum_2(G, sig, "v1v3", G, frozenset(), "v1v2")
    report = is_critical(S, ssig)
    assert report.index == 2 and not report.critical


def test_edge_sum_3_with_theta_is_critical():
    P, sig, _ = generate("petersen_sigma2")
    u = next(x for x in P.vertices if not any(e.id in sig for e in P.incident(x)))
    S, ssig = edge_sum_3(P, sig, u, theta(), frozenset(), "s")
    assert len(S) == 9 + 4 and len(S.edges) == 15 - 3 + 6 - 3 + 3
    report = is_critical(S, ssig)
    assert report.critical and report.index == 3
    assert in_s_star(S, ssig)


def test_edge_sum_3_with_k4_is_cubic():
    P, sig, _ = generate("petersen_sigma2")
    u = next(x for x in P.vertices if not any(e.id in sig for e in P.incident(x)))
    K = generate("anti_complete", 4).graph.with_signature(set())
    S, _ = edge_sum_3(P, sig, u, K, frozenset(), "v1", pairing=(2, 0, 1))
    assert all(S.degree(x) == 3 for x in S.vertices) and len(S) == 12


def test_edge_sum_3_preconditions():
    P, sig, _ = generate("petersen_sigma2")
    bad = next(x for x in P.vertices if any(e.id in sig for e in P.incident(x)))
    with pytest.raises(PreconditionError):
        edge_sum_3(P, sig, bad, theta(), frozenset(), "s")
    with pytest.raises(PreconditionError):
        edge_sum_3(P, sig, bad, theta(), frozenset(), "m0")


def test_edge_sum_2_rejects_negative_edge():
    G, sig, _ = generate("anti_complete", 4)
    with pytest.raises(PreconditionError):
        edge_sum_2(G, sig, "v1v2", G, sig, "v1v2")


# decomposition


def test_trivial_decomposition_hints():
    assert trivially_decomposable(*pair("neg_loops", 2)).reason == "negative loop"
    assert trivially_decomposable(*pair("plus_minus", 2)) is not None
    assert trivially_decomposable(*pair("anti_complete", 4)) is None


@pytest.mark.parametrize(
    "key,indices",
    [
        (("neg_loops", 2), (1, 1)),
        (("plus_minus", 3), (1, 1, 1)),
        (("anti_complete", 4), None),
        (("anti_wheel", 2), None),
        (("petersen_sigma2", None), None),
    ],
)
def test_decompose_exhaustive(key, indices):
    G, sig, _ = generate(*key)
    w = decompose_exhaustive(G, sig)
    if indices is None:
        assert w is None
    else:
        assert tuple(sorted(w.indices)) == indices
        check_decomposition(G, sig, w, sum(indices))


def test_decompose_sum_of_anti_k4_copies():
    K, sig, _ = generate("anti_complete", 4)
    G = disjoint_union(K, K)
    w = decompose_exhaustive(G, G.signature)
    assert w.indices == (2, 2)


def test_decompose_caps():
    G, sig, _ = generate("anti_complete", 6)
    with pytest.raises(BudgetExceededError):
        decompose_exhaustive(G, sig, max_edges=10)


# cyclic connectivity


@pytest.mark.parametrize(
    "key,expected",
    [(("petersen_sigma2", None), 5), (("escher_wall", 3), 4), (("projective_cube", 3), None)],
)
def test_cyclic_edge_connectivity(key, expected):
    G = generate(*key).graph
    if expected is None:
        # not cubic
        with pytest.raises(PreconditionError):
            cyclic_edge_connectivity(G)
        return
    assert cyclic_edge_connectivity(G) == expected
    if len(G) <= 14:
        assert cyclic_edge_connectivity_brute(G) == expected


def test_cyclic_connectivity_of_prism():
    G = build_graph(
        ["a", "b", "c", "x", "y", "z"],
        [("ab", "a", "b", "+"), ("bc", "b", "c", "+"), ("ca", "c", "a", "+"),
         ("xy", "x", "y", "+"), ("yz", "y", "z", "+"), ("zx", "z", "x", "+"),
         ("ax", "a", "x", "+"), ("by", "b", "y", "+"), ("cz", "c", "z", "+")],
    )
    assert cyclic_edge_connectivity(G) == 3 == cyclic_edge_connectivity_brute(G)


def test_s_star_structure_report():
    report = verify_s_star_structure(*pair("escher_wall", 3))
    assert report.passed, report.checks
    report = verify_s_star_structure(*pair("anti_complete", 4))
    assert not report.passed
