"""Exact frustration index, criticality certificates and structure of signed graphs."""

from .balance import BalanceCertificate, is_balanced, iter_circuits, negative_circuits
from .core import (
    CutSummary,
    Edge,
    Sign,
    SignedGraph,
    build_graph,
    canonical_sorted,
    components,
    cut,
    cut_summary,
    disjoint_union,
    signature_to_switch_set,
    switch,
)
from .criticality import (
    CriticalityReport,
    EquilibratedCutWitness,
    check_lambda_bounds,
    equilibrated_cut_for_edge,
    extract_critical_subgraph,
    is_critical,
)
from .exceptions import (
    BudgetExceededError,
    InternalInconsistencyError,
    MalformedInputError,
    ParseError,
    PreconditionError,
    SignedGraphError,
)
from .families import FamilySpec, generate
from .frustration import (
    FrustrationResult,
    all_min_signatures,
    frustration,
    frustration_bnb,
    frustration_deletion_oracle,
    frustration_index,
    frustration_switch_enum,
)
from .io import parse_graph, read_graph, serialize_graph, write_graph

__version__ = "0.1.0"

__all__ = [
    "BalanceCertificate",
    "BudgetExceededError",
    "CriticalityReport",
    "CutSummary",
    "Edge",
    "EquilibratedCutWitness",
    "FamilySpec",
    "FrustrationResult",
    "InternalInconsistencyError",
    "MalformedInputError",
    "ParseError",
    "PreconditionError",
    "Sign",
    "SignedGraph",
    "SignedGraphError",
    "all_min_signatures",
    "build_graph",
    "canonical_sorted",
    "check_lambda_bounds",
    "components",
    "cut",
    "cut_summary",
    "disjoint_union",
    "equilibrated_cut_for_edge",
    "extract_critical_subgraph",
    "frustration",
    "frustration_bnb",
    "frustration_deletion_oracle",
    "frustration_index",
    "frustration_switch_enum",
    "generate",
    "is_balanced",
    "is_critical",
    "iter_circuits",
    "negative_circuits",
    "parse_graph",
    "read_graph",
    "serialize_graph",
    "signature_to_switch_set",
    "switch",
    "write_graph",
]
