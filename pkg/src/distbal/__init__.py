"""Distance-balance invariants of finite simple graphs."""

from distbal._backend import BACKEND
from distbal.balance import (
    BalanceReport,
    Verdict,
    Witness,
    classify_edges_for_pair,
    classify_vertices_for_pair,
    edge_distance_partition,
    full_balance_report,
    has_delta_property,
    is_distance_balanced,
    is_edge_distance_balanced,
    is_k_distance_balanced,
    is_k_edge_distance_balanced,
    is_locally_regular,
    total_distance,
)
from distbal.constructions import (
    FamilySpec,
    cartesian_product,
    generate,
    lexicographic_product,
    product_distance,
    subdivision,
    triangle_extension,
)
from distbal.enumeration import canonical_form, enumerate_graphs
from distbal.formats import parse_edge_list, parse_graph6, to_edge_list, to_graph6
from distbal.graph import (
    UNREACHABLE,
    DistanceOracle,
    Graph,
    all_pairs_distances,
    build_graph,
    edge_edge_distance,
    has_even_cycle,
    is_bipartite,
    is_connected,
    pendant_vertices,
    vertex_edge_distance,
)
from distbal.verification import ClaimId, CounterexampleReport, check_claim

__version__ = "0.1.0"
