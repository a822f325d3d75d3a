"""
Structural predicates used by the class-C necessary conditions.
"""

from dataclasses import dataclass

import networkx as nx

from .graph import Graph


@dataclass(frozen=True)
class StructuralPredicates:
    connected: bool
    bipartite: bool
    regular: bool
    diameter: int | None  # None when disconnected
    every_vertex_on_triangle: bool
    every_edge_on_triangle: bool

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "bipartite": self.bipartite,
            "regular": self.regular,
            "diameter": self.diameter,
            "every_vertex_on_triangle": self.every_vertex_on_triangle,
            "every_edge_on_triangle": self.every_edge_on_triangle,
        }


def every_edge_on_triangle(graph: Graph) -> bool:
    """Every edge {u, v} has a common neighbor."""
    return all(
        graph.neighbor_set(u) & graph.neighbor_set(v)
        for u, v in graph.edges
    )


def structural_predicates(graph: Graph) -> StructuralPredicates:
    nxg = graph.to_networkx()

    connected = nx.is_connected(nxg)
    triangles = nx.triangles(nxg)

    return StructuralPredicates(
        connected=connected,
        bipartite=nx.is_bipartite(nxg),
        regular=nx.is_regular(nxg),
        diameter=nx.diameter(nxg) if connected else None,
        every_vertex_on_triangle=all(count > 0 for count in triangles.values()),
        every_edge_on_triangle=every_edge_on_triangle(graph),
    )
