"""Metric-location toolkit for pseudotrees.

Computes nine location parameters of paths, cycles, trees and unicyclic
graphs through closed forms, certified intervals and brute-force oracles,
plus an exhaustive corpus-verification harness.
"""

from .closed_form import (
    closed_result,
    compute_parameter,
    ddim_closed,
    dim2_closed,
    dim_closed,
    dimk_closed,
    dmd_closed,
    edim_closed,
    ldim_closed,
    mdim_closed,
    oracle_result,
    PARAMETER_NAMES,
    sdim_closed,
    sdim_even_fast,
    sdim_sr_formula,
    tree_zeta,
    valid_k_range,
)
from .corpus import (
    CorpusSpec,
    VerificationRecord,
    enumerate_trees,
    enumerate_unicyclic,
    random_pseudotree,
    tree_canonical_form,
    tree_canonical_key,
    unicyclic_canonical_form,
    unicyclic_canonical_key,
    verify_corpus,
    verify_graph,
)
from .errors import (
    Disconnected,
    DuplicateEdge,
    KOutOfRange,
    MalformedGraph6,
    NotPseudotree,
    NotUnicyclic,
    PseudolocError,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)
from .graph import (
    DistanceMatrix,
    Graph,
    distance_matrix,
    encode_graph6,
    format_edgelist,
    from_edge_list,
    girth_and_cycle,
    is_bipartite,
    parse_edgelist,
    parse_graph6,
)
from .resolvers import (
    DOUBLY,
    EDGE,
    LOCAL,
    METRIC,
    MIXED,
    MLD,
    STRONG,
    ParameterResult,
    Variant,
    brute_force_dimension,
    doubly_resolves,
    edge_distance,
    is_locating_set,
    k_dimensional_value,
    k_metric,
    resolves,
    strong_resolves,
)
from .structure import (
    FamilyKind,
    PseudotreeProfile,
    StrongResolvingGraph,
    antipodal_pairs,
    boundary_and_sr_graph,
    classify,
    closed_necklace,
    domination_number,
    find_geodesic_triple,
    geodesic_triple_exists,
    independence_number,
    profile,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
