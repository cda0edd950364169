from itertools import combinations

import pytest

from sgfrust import PreconditionError, frustration, generate, is_critical, serialize_graph
from sgfrust.families import (
    KINDS,
    FamilySpec,
    generate_even_wall,
    generate_odd_wall,
    projective_cube_disjoint_signatures,
)
from sgfrust.io import digest
from sgfrust.structure import switch_isomorphic

# (kind, parameter) -> (|V|, |E|, |Σ|, sha256 prefix of the sg1 text); frozen golden values
GOLDEN = {
    ("neg_loops", 3): (1, 3, 3, "3813fee02658cffc"),
    ("plus_minus", 3): (3, 6, 3, "7f835108609653eb"),
    ("anti_complete", 5): (5, 10, 10, "fa7e4f4bc7ed8abb"),
    ("anti_wheel", 2): (6, 10, 10, "979cbc533c2706c7"),
    ("projective_cube", 3): (8, 16, 4, "b5172ba18c13d84a"),
    ("escher_wall", 3): (12, 18, 3, "485048f039f352d9"),
    ("escher_wall", 4): (20, 30, 4, "5d5006f2f0c00147"),
    ("escher_wall_prime", 3): (10, 15, 3, "0af05ce7c8fdb1d3"),
    ("escher_wall_prime", 5): (32, 48, 5, "0710670519e3c302"),
    ("petersen_sigma1", None): (10, 15, 3, "eb7b46d23a3975b9"),
    ("petersen_sigma2", None): (10, 15, 3, "971ddc9d4e19ad0f"),
    ("octahedron_anti", None): (6, 12, 12, "55bf08ef8dfbdba6"),
}


@pytest.mark.parametrize("key", sorted(GOLDEN, key=str))
def test_golden_generators(key):
    G, sig, meta = generate(*key)
    n, m, s, h = GOLDEN[key]
    assert (len(G), len(G.edges), len(sig)) == (n, m, s)
    assert digest(serialize_graph(G, sig)).startswith(h)
    assert meta["kind"] == key[0] and meta["parameter"] == key[1]


@pytest.mark.parametrize("key", sorted(GOLDEN, key=str))
def test_generated_members_meet_their_metadata(key):
    G, sig, meta = generate(*key)
    report = is_critical(G, sig, solver="bnb")
    assert report.index == meta["expected_index"]
    assert report.critical == meta["expected_critical"]


def test_generation_is_deterministic():
    a = generate(FamilySpec("escher_wall", 5))
    b = generate("escher_wall", 5)
    assert a.graph == b.graph and a.signature == b.signature


@pytest.mark.parametrize(
    "kind,k",
    [("neg_loops", 0), ("plus_minus", 1), ("anti_complete", 2), ("escher_wall", 2),
     ("escher_wall_prime", 4), ("petersen_sigma2", 3), ("nope", 1), ("anti_wheel", None)],
)
def test_bad_parameters(kind, k):
    with pytest.raises(PreconditionError):
        generate(kind, k)


def test_kinds_listed():
    assert {"escher_wall", "escher_wall_prime", "projective_cube"} <= set(KINDS)


def test_wall_parity_guards():
    with pytest.raises(PreconditionError):
        generate_even_wall(5)
    with pytest.raises(PreconditionError):
        generate_odd_wall(4)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_walls_are_cubic_with_k_negative_edges(k):
    G, sig, meta = generate("escher_wall", k)
    assert all(G.degree(x) == 3 for x in G.vertices)
    assert len(sig) == k
    coords = meta["coordinates"]
    assert len(coords.x) == len(coords.y) == k
    assert set(coords.labels) == set(G.vertices)


@pytest.mark.parametrize("kind,k", [("escher_wall", 3), ("escher_wall", 4), ("escher_wall", 5),
                                    ("escher_wall_prime", 3), ("escher_wall_prime", 5)])
def test_wall_boundary_is_a_closed_walk_through_terminals(kind, k):
    G, sig, meta = generate(kind, k)
    b = meta["coordinates"].boundary
    assert len(set(b)) == len(b)
    for a, c in zip(b, b[1:] + b[:1]):
        assert G.edges_between(a, c)
    assert set(meta["coordinates"].x) | set(meta["coordinates"].y) <= set(b)


@pytest.mark.parametrize("kind,k", [("escher_wall", 5), ("escher_wall", 6), ("escher_wall_prime", 5)])
def test_larger_walls_are_critical(kind, k):
    G, sig, _ = generate(kind, k)
    res = frustration(G, sig, method="bnb")
    assert res.certified and res.index == k
    assert is_critical(G, sig, method="per-edge", solver="bnb").critical


def test_prime_wall_three_is_petersen():
    G, sig, _ = generate("escher_wall_prime", 3)
    P, psig, _ = generate("petersen_sigma2")
    assert switch_isomorphic(G, sig, P, psig)
    E3, esig, _ = generate("escher_wall", 3)
    assert not switch_isomorphic(E3, esig, P, psig)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_projective_cube_disjoint_signatures(k):
    G, sig, _ = generate("projective_cube", k)
    sigs = projective_cube_disjoint_signatures(k)
    assert len(sigs) == k + 1
    assert all(not (a & b) for a, b in combinations(sigs, 2))
    assert all(len(frustration(G, s).witness) == 2 ** (k - 1) == len(s) for s in sigs)


def test_petersen_fixtures_differ():
    (P1, s1, _), (P2, s2, _) = generate("petersen_sigma1"), generate("petersen_sigma2")
    assert P1 == P2.with_signature(s1) and s1 != s2
