"""Counting and constructing k-dominating independent sets (k-DISes)."""
from .graph import Graph, GraphError, from_edges, graph6_decode, graph6_encode
from .search import count_kdis, enumerate_kdis, is_independent, is_k_dominating, is_kdis
from .trees import NotAForestError, solve_tree_kdis

__all__ = [
    "Graph",
    "GraphError",
    "NotAForestError",
    "count_kdis",
    "enumerate_kdis",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "is_independent",
    "is_k_dominating",
    "is_kdis",
    "solve_tree_kdis",
]
