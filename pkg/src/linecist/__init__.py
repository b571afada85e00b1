"""Completely independent spanning trees in line graphs: construction and verification."""
from .complete import lkn_cists, lkn_family, lkn_fault_survivors
from .connectivity import (
    ConnectivityReport,
    connectivity_report,
    edge_connectivity,
    is_super_edge_connected,
    restricted_edge_connectivity_22,
    vertex_connectivity,
)
from .construct import CdsFamily, CistFamily, cds_to_cists, line_cists, line_cists_case1, line_cists_case2
from .errors import ContractViolation, Infeasible, ParseError, ValidationError
from .graph import Graph, LineGraph, complete_graph, h_ell_graph, line_graph, petersen_graph
from .io import from_edge_list, to_dot, to_edge_list
from .packing import SpanningForestFamily, tau, tau_prime, tree_packing
from .theorems import check_theorems
from .verify import (
    VerificationReport,
    cist_exists_bruteforce,
    cist_upper_bounds,
    connected_domination_number,
    is_cist_family,
    is_valid_cds_family,
)

__all__ = [
    "CdsFamily", "CistFamily", "ConnectivityReport", "ContractViolation", "Graph", "Infeasible",
    "LineGraph", "ParseError", "SpanningForestFamily", "ValidationError", "VerificationReport",
    "cds_to_cists", "check_theorems", "cist_exists_bruteforce", "cist_upper_bounds", "complete_graph",
    "connected_domination_number", "connectivity_report", "edge_connectivity", "from_edge_list",
    "h_ell_graph", "is_cist_family", "is_super_edge_connected", "is_valid_cds_family", "line_cists",
    "line_cists_case1", "line_cists_case2", "line_graph", "lkn_cists", "lkn_family",
    "lkn_fault_survivors", "petersen_graph", "restricted_edge_connectivity_22", "tau", "tau_prime",
    "to_dot", "to_edge_list", "tree_packing", "vertex_connectivity",
]
