"""Local clique cover numbers: exact solvers, constructive covers and small-graph sweeps."""

from .cover import CliqueCover, CliquePartition, cp_exact, lcc, lcc_decide, lcc_exact, scp_exact, validate_cover
from .graph import Graph, complement, emit_graph6, from_edge_list, parse_graph6

__all__ = [
    "CliqueCover",
    "CliquePartition",
    "Graph",
    "complement",
    "cp_exact",
    "emit_graph6",
    "from_edge_list",
    "lcc",
    "lcc_decide",
    "lcc_exact",
    "parse_graph6",
    "scp_exact",
    "validate_cover",
]

__version__ = "0.1.0"
