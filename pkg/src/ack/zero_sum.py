"""
Zero-sum subset enumeration.

A subset S is zero-sum relative to x when sum(x_v for v in S) = 0. With
several kernel vectors the same enumerator finds subsets that are zero-sum
relative to all of them at once (orthogonal to the kernel).

Subsets come out ordered by size, then lexicographically.
"""

from itertools import accumulate
from math import lcm
from typing import Iterator, Sequence

from src.errors import ConsistencyError, GraphError
from src.graph import Graph, VertexSet
from src.linalg import QVector
from src.spectral import kernel


class _SuffixBounds:
    """min/max sum of r entries taken from positions i.. of an integer vector."""

    def __init__(self, values: Sequence[int]):
        n = len(values)
        self.low = []
        self.high = []
        for i in range(n + 1):
            suffix = sorted(values[i:])
            self.low.append([0] + list(accumulate(suffix)))
            self.high.append([0] + list(accumulate(reversed(suffix))))

    def admits(self, start: int, count: int, target: int) -> bool:
        return self.low[start][count] <= target <= self.high[start][count]


def to_integer_vector(x: QVector) -> tuple[int, ...]:
    """Scale by the common denominator (zero-sum sets are unchanged)."""
    common = lcm(*(a.denominator for a in x.entries)) if len(x) else 1
    return tuple(int(a * common) for a in x.entries)


def orthogonal_subsets(vectors: Sequence[Sequence[int]], n: int, size: int) -> Iterator[tuple[int, ...]]:
    """
    All size-`size` subsets of 0..n-1 (lex order) whose entries sum to zero
    in every vector. Branches that can no longer reach zero are pruned.
    """
    if size < 1 or size > n:
        return

    bounds = [_SuffixBounds(v) for v in vectors]
    chosen: list[int] = []

    def extend(start: int, remaining: int, partial: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            if all(p == 0 for p in partial):
                yield tuple(chosen)
            return
        for i in range(start, n - remaining + 1):
            updated = [p + v[i] for p, v in zip(partial, vectors)]
            rest = remaining - 1
            if all(b.admits(i + 1, rest, -p) for b, p in zip(bounds, updated)):
                chosen.append(i)
                yield from extend(i + 1, rest, updated)
                chosen.pop()

    yield from extend(0, size, [0] * len(vectors))


def zero_sum_subsets(x: QVector, size: int | None = None) -> Iterator[VertexSet]:
    """Lazily produce zero-sum subsets relative to x (1-based labels)."""
    if x.is_zero():
        raise ValueError("zero_sum_subsets needs a nonzero vector")

    values = [to_integer_vector(x)]
    sizes = [size] if size is not None else range(1, len(x) + 1)
    for s in sizes:
        for combo in orthogonal_subsets(values, len(x), s):
            yield VertexSet(tuple(k + 1 for k in combo))


def is_zero_sum(x: QVector, subset) -> bool:
    return sum((x.coordinate(v) for v in subset), 0) == 0


def neighborhood_zero_sum(graph: Graph, v0: int) -> VertexSet:
    """
    N(v0), which is zero-sum relative to every kernel vector because
    (A x)_{v0} = 0.
    """
    basis = kernel(graph)
    if basis.nullity == 0:
        raise ValueError("Graph is nonsingular; there is no kernel vector")
    if graph.degree(v0) == 0:
        raise GraphError(f"Vertex {v0} is isolated", vertex=v0)

    subset = graph.neighborhood(v0)
    for x in basis.basis:
        if not is_zero_sum(x, subset):
            raise ConsistencyError(f"N({v0}) = {subset} is not zero-sum relative to {x}")
    return subset


def degree_free_zero_sum(graph: Graph, x: QVector) -> VertexSet | None:
    """
    First zero-sum subset (relative to x) whose size is no vertex degree.
    Such a subset cannot be a row of A_G.
    """
    if len(x) != graph.n:
        raise ValueError(f"Vector length {len(x)} does not match n={graph.n}")
    degrees = set(graph.degrees())
    for s in range(1, graph.n + 1):
        if s in degrees:
            continue
        found = next(zero_sum_subsets(x, s), None)
        if found is not None:
            return found
    return None
