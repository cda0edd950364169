"""Frozen reference values, checked against the brute-force oracles and the package."""

import pytest

from sgfrust import frustration, generate, negative_circuits

from oracles import (
    circuits_brute,
    critical_brute,
    cyclic_edge_connectivity_brute,
    frustration_brute,
    min_signatures_brute,
    negative_circuits_brute,
)

# (kind, parameter) -> frustration index, frozen from the oracle
FROZEN_INDEX = {
    ("neg_loops", 1): 1,
    ("neg_loops", 3): 3,
    ("plus_minus", 2): 2,
    ("plus_minus", 4): 4,
    ("anti_complete", 3): 1,
    ("anti_complete", 4): 2,
    ("anti_complete", 5): 4,
    ("anti_complete", 6): 6,
    ("anti_complete", 7): 9,
    ("anti_wheel", 1): 2,
    ("anti_wheel", 2): 3,
    ("anti_wheel", 3): 4,
    ("projective_cube", 1): 1,
    ("projective_cube", 2): 2,
    ("projective_cube", 3): 4,
    ("petersen_sigma1", None): 3,
    ("petersen_sigma2", None): 3,
    ("octahedron_anti", None): 4,
    ("escher_wall", 3): 3,
    ("escher_wall_prime", 3): 3,
}


@pytest.mark.parametrize("key,expected", sorted(FROZEN_INDEX.items(), key=str))
def test_frozen_index_oracle_and_solver(key, expected):
    G, sig, _ = generate(*key)
    if len(G) <= 12:
        assert frustration_brute(G, sig) == expected
    assert frustration(G, sig).index == expected


def test_frozen_min_signatures_of_anti_k4():
    G, sig, _ = generate("anti_complete", 4)
    sigs = min_signatures_brute(G, sig)
    assert sigs == {frozenset({"v1v2", "v3v4"}), frozenset({"v1v3", "v2v4"}), frozenset({"v1v4", "v2v3"})}


def test_frozen_circuit_counts_of_k4():
    G, sig, _ = generate("anti_complete", 4)
    # four triangles are negative, three 4-circuits are positive
    assert len(circuits_brute(G)) == 7
    assert len(negative_circuits_brute(G, sig)) == 4
    assert sorted(negative_circuits(G, sig), key=sorted) == sorted(negative_circuits_brute(G, sig), key=sorted)


@pytest.mark.parametrize("key", [("anti_complete", 4), ("anti_wheel", 2), ("neg_loops", 2), ("plus_minus", 3)])
def test_frozen_criticality(key):
    G, sig, _ = generate(*key)
    assert critical_brute(G, sig)


def test_frozen_cyclic_connectivity():
    P, _, _ = generate("petersen_sigma2")
    assert cyclic_edge_connectivity_brute(P) == 5
    K, _, _ = generate("anti_complete", 4)
    assert cyclic_edge_connectivity_brute(K) is None
