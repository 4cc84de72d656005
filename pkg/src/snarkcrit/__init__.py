"""Exact resistance, minimal conflicting subgraph and critical subgraph analysis for snarks."""

from .analysis import AnalysisReport, analyze, to_dot
from .colouring import Colouring, ColouringOracle, MinimalColouring
from .criticality import MCS, Decomposition, enumerate_all_mcs, grow_from_edge, shrink_to_mcs
from .generators import generate
from .graph import EdgeInducedSubgraph, EdgeSet, Graph, GraphError
from .io import GraphFormatError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, read_graph
from .resistance import (CriticalSubgraph, HittingSet, ResistanceResult, critical_subgraph_via_colourings,
                         critical_subgraph_via_hitting, min_hitting_sets, resistance, verify_hitting_theorems)
from .structure import (Cluster, OddnessResult, chain_cluster_census, check_conjectures, clusters,
                        is_hypohamiltonian, oddness)

__all__ = [
    "AnalysisReport", "analyze", "to_dot",
    "Colouring", "ColouringOracle", "MinimalColouring",
    "MCS", "Decomposition", "enumerate_all_mcs", "grow_from_edge", "shrink_to_mcs",
    "generate",
    "EdgeInducedSubgraph", "EdgeSet", "Graph", "GraphError",
    "GraphFormatError", "emit_edge_list", "emit_graph6", "parse_edge_list", "parse_graph6", "read_graph",
    "CriticalSubgraph", "HittingSet", "ResistanceResult", "critical_subgraph_via_colourings",
    "critical_subgraph_via_hitting", "min_hitting_sets", "resistance", "verify_hitting_theorems",
    "Cluster", "OddnessResult", "chain_cluster_census", "check_conjectures", "clusters",
    "is_hypohamiltonian", "oddness",
]
