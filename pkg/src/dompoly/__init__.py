"""Domination polynomials, neighborhood polynomials and complete bipartite
subgraph counts of small simple graphs, each computed by independent routes."""

from .bipartite import (
    BipartiteCensus,
    CompleteBipartite,
    Empty,
    Other,
    classify_complete_bipartite,
    count_complete_bipartite_subgraphs,
    count_parity_classes_fast,
    dominating_count_via_bipartite,
    h_polynomial,
    neighborhood_polynomial_via_bipartite,
)
from .domination import (
    dominating_set_count,
    domination_polynomial,
    domination_polynomial_via_complement,
    is_dominating,
)
from .errors import CapacityError, DompolyError, GraphInputError, ParseError
from .formats import parse_edge_list, parse_graph6, read_graph, write_edge_list, write_graph6
from .graph import (
    Graph,
    all_labeled_graphs,
    closed_neighborhood_of_set,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_edges,
    edge_boundary,
    empty_graph,
    from_edge_list,
    members,
    open_neighborhood_of_set,
    path_graph,
    random_gnp,
    vertex_set,
)
from .identities import (
    VerificationReport,
    alternating_edge_subset_sum,
    lemma_parity_signed_sum,
    lemma_pi_signed_sum,
    verify_all,
    verify_alternating_sum,
    verify_dn_identity,
)
from .neighborhood import (
    in_neighborhood_complex,
    neighborhood_polynomial,
    neighborhood_polynomial_direct,
    neighborhood_polynomial_inclusion_exclusion,
)
from .poly import IntPoly, one_plus_x_power, poly_add, poly_eval_int, poly_sub

__version__ = "0.1.0"
