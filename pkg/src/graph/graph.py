"""
Simple undirected graph with 1-indexed vertices.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from src.errors import GraphError
from src.linalg import QMatrix, QVector


@dataclass(frozen=True)
class VertexSet:
    """Sorted set of 1-based vertex labels."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(int(v) for v in self.members))))

    @classmethod
    def of(cls, *labels: int) -> "VertexSet":
        return cls(labels)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def isdisjoint(self, other: Iterable[int]) -> bool:
        return set(self.members).isdisjoint(other)

    def characteristic(self, n: int) -> QVector:
        return QVector.characteristic(n, self.members)

    def validate(self, n: int) -> None:
        for v in self.members:
            if not 1 <= v <= n:
                raise GraphError(f"Vertex {v} out of range 1..{n}", vertex=v)

    def to_list(self) -> list[int]:
        return list(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members) + "}"


@dataclass(frozen=True)
class Graph:
    """
    Simple graph on vertices 1..n.

    Edges are stored as (i, j) with i < j. Use from_edges() to build one from
    arbitrary pairs.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"Graph needs at least one vertex, got n={self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise GraphError(f"Edge {(i, j)} is not a normalized pair in 1..{self.n}", pair=(i, j))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        if n < 1:
            raise GraphError(f"Graph needs at least one vertex, got n={n}")
        normalized = set()
        for pair in edges:
            pair = tuple(pair)
            if len(pair) != 2:
                raise GraphError(f"Edge {pair} must have exactly two endpoints", pair=pair)
            i, j = int(pair[0]), int(pair[1])
            if i == j:
                raise GraphError(f"Self-loop at vertex {i}", pair=(i, j))
            for v in (i, j):
                if not 1 <= v <= n:
                    raise GraphError(f"Vertex {v} in edge {(i, j)} out of range 1..{n}", pair=(i, j))
            normalized.add((min(i, j), max(i, j)))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> "Graph":
        """Nodes are relabeled 1..n in sorted node order."""
        order = sorted(nxg.nodes())
        index = {node: k + 1 for k, node in enumerate(order)}
        return cls.from_edges(len(order), [(index[u], index[v]) for u, v in nxg.edges()])

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(1, self.n + 1))
        nxg.add_edges_from(self.edges)
        return nxg

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def _neighbors(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"Vertex {v} out of range 1..{self.n}", vertex=v)

    def neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(tuple(self._neighbors[v]))

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._neighbors[v])

    def degrees(self) -> list[int]:
        """Degrees in vertex order."""
        return [len(self._neighbors[v]) for v in self.vertices]

    def degree_sequence(self) -> list[int]:
        return sorted(self.degrees())

    @cached_property
    def adjacency(self) -> QMatrix:
        return QMatrix.from_rows([
            [1 if j in self._neighbors[i] else 0 for j in self.vertices]
            for i in self.vertices
        ])

    def adjacency_matrix(self) -> QMatrix:
        return self.adjacency

    def adjacency_vector(self, v: int) -> QVector:
        """a^v: row v of A_G."""
        self._check_vertex(v)
        return QVector.characteristic(self.n, self._neighbors[v])

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """G + v where v = n+1 is joined to the given vertices."""
        new = self.n + 1
        return Graph.from_edges(new, list(self.edges) + [(u, new) for u in neighbors])

    def remove_vertex(self, v: int) -> "Graph":
        """G - v; vertices above v shift down by one."""
        self._check_vertex(v)
        if self.n == 1:
            raise GraphError("Cannot remove the only vertex", vertex=v)

        def relabel(u: int) -> int:
            return u - 1 if u > v else u

        return Graph.from_edges(
            self.n - 1,
            [(relabel(i), relabel(j)) for i, j in self.edges if v not in (i, j)],
        )


def from_edges(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    return Graph.from_edges(n, edges)


def adjacency_matrix(graph: Graph) -> QMatrix:
    return graph.adjacency


def degree_sequence(graph: Graph) -> list[int]:
    return graph.degree_sequence()


def neighborhood(graph: Graph, v: int) -> VertexSet:
    return graph.neighborhood(v)
