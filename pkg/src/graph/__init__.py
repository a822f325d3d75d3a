"""
Graph Model
Simple undirected graphs, structural predicates and file formats
"""

from .graph import Graph, VertexSet, from_edges, adjacency_matrix, degree_sequence, neighborhood
from .predicates import StructuralPredicates, structural_predicates, every_edge_on_triangle
from .formats import (
    parse_graph6,
    emit_graph6,
    parse_edge_list,
    emit_edge_list,
    read_graph,
    write_graph,
    detect_format,
)

__all__ = [
    "Graph",
    "VertexSet",
    "from_edges",
    "adjacency_matrix",
    "degree_sequence",
    "neighborhood",
    "StructuralPredicates",
    "structural_predicates",
    "every_edge_on_triangle",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "read_graph",
    "write_graph",
    "detect_format",
]
