"""Spectral classification of Coxeter graphs.

A Coxeter graph carries bond labels m >= 3 (or "inf") on its edges; a missing
edge means m = 2.  The generalized adjacency matrix A = 2I - C determines a
five-way classification (Spherical, Affine, StronglyHyperbolic,
WeaklyHyperbolic, HigherRank) via the count of eigenvalues above 2, and the
second eigenvector of a connected higher-rank graph splits it into two
disjoint induced subgraphs that are each hyperbolic or higher rank.
"""

from ._core import (
    ComputationError,
    DomainError,
    Graph,
    GraphParseError,
    InvariantBreachError,
    PreconditionError,
    ResourceError,
    are_disjoint,
    are_separated,
    build_graph,
    canonical_form,
    certify_higher_rank_via_separation,
    classical_diagram,
    classification_report_json,
    classify,
    cone_vertex_witness,
    connected_components,
    connected_graphs,
    decompose_higher_rank,
    default_tolerance,
    figure,
    find_separated_hyperbolic_pair,
    form_matrix,
    free_trees,
    generalized_adjacency,
    graph_from_canonical_form,
    has_disjoint_hyperbolic_pair,
    induced_subgraph,
    inertia,
    is_connected,
    make_subhyperbolic_triple,
    parse_graph_text,
    perron_data,
    rayleigh_bound_check,
    run_cli,
    serialize_graph,
    sign_split,
    spectrum,
    sweep_subhyperbolic_triples,
    verify_corpus,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
