"""
Parametric graph families.

Vertex orderings are fixed so kernel vectors can be written down directly.
"""

from src.errors import ConstructionError
from src.graph import Graph
from src.linalg import QVector
from src.spectral import classify, kernel
from .result import ConstructionResult, certify_kernel_vectors


def path(n: int) -> Graph:
    """P_n: 1 - 2 - ... - n"""
    if n < 1:
        raise ConstructionError("n >= 1 required", ["n_positive"])
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    """C_n: 1 - 2 - ... - n - 1"""
    if n < 3:
        raise ConstructionError("n >= 3 required", ["n_at_least_3"])
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("n >= 1 required", ["n_positive"])
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def satellite_kernel_vector(k: int) -> QVector:
    """-1 at the dominating vertex, +1 on the cycle, -1 on the satellites."""
    return QVector.of([-1] + [1] * k + [-1] * k)


def satellite(k: int) -> ConstructionResult:
    """
    Satellite graph S_{2k+1}.

    Vertex 1 dominates; u_i = i + 1 form a k-cycle in index order;
    w_i = k + 1 + i is joined to u_i (and to vertex 1).
    """
    if k < 3:
        raise ConstructionError("k >= 3 required", ["k_at_least_3"])

    n = 2 * k + 1
    edges = [(1, v) for v in range(2, n + 1)]
    edges += [(1 + i, 1 + i % k + 1) for i in range(1, k + 1)]
    edges += [(1 + i, 1 + k + i) for i in range(1, k + 1)]
    graph = Graph.from_edges(n, edges)

    x = satellite_kernel_vector(k)
    certified = certify_kernel_vectors(graph, [x])
    basis = kernel(graph)
    profile = classify(graph, basis)

    return ConstructionResult(
        graph=graph,
        certified_kernel_vectors=certified,
        hypothesis_report={
            "is_nut": profile.is_nut,
            "kernel_matches": basis.nullity == 1 and basis.basis[0].is_proportional_to(x),
        },
        notes=(f"S_{n}: dom=1, u=2..{k + 1}, w={k + 2}..{n}",),
    )


def cartesian_product(first: Graph, second: Graph) -> Graph:
    """
    G x H with (g, h) -> (g - 1) * |V(H)| + h.

    For G = K2 the adjacency matrix is [[A_H, I], [I, A_H]].
    """
    m = second.n

    def label(g: int, h: int) -> int:
        return (g - 1) * m + h

    edges = []
    for g in first.vertices:
        edges.extend((label(g, a), label(g, b)) for a, b in second.edges)
    for a, b in first.edges:
        edges.extend((label(a, h), label(b, h)) for h in second.vertices)
    return Graph.from_edges(first.n * m, edges)
