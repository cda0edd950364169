"""Structural theory of critical signed graphs."""

from .circuits import DisjointCircuitWitness, in_s_star, two_edge_disjoint_negative_circuits
from .connectivity import StructureReport, cyclic_edge_connectivity, verify_s_star_structure
from .decomposition import (
    DecompositionHint,
    DecompositionWitness,
    decompose_exhaustive,
    trivially_decomposable,
)
from .isomorphism import find_switch_isomorphism, switch_isomorphic
from .subdivision import (
    ClassificationResult,
    NotSuppressibleError,
    classify_low_critical,
    irreducible,
    reduce_to_irreducible,
    reduction_sequence,
    subdivide_multiedge,
    suppress_vertex,
    suppressible,
)
from .sums import edge_sum_2, edge_sum_3

__all__ = [
    "ClassificationResult",
    "DecompositionHint",
    "DecompositionWitness",
    "DisjointCircuitWitness",
    "NotSuppressibleError",
    "StructureReport",
    "classify_low_critical",
    "cyclic_edge_connectivity",
    "decompose_exhaustive",
    "edge_sum_2",
    "edge_sum_3",
    "find_switch_isomorphism",
    "in_s_star",
    "irreducible",
    "reduce_to_irreducible",
    "reduction_sequence",
    "subdivide_multiedge",
    "suppress_vertex",
    "suppressible",
    "switch_isomorphic",
    "trivially_decomposable",
    "two_edge_disjoint_negative_circuits",
    "verify_s_star_structure",
]
