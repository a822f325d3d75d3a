"""
Kernel of the adjacency matrix and full kernel vectors.
"""

import logging
from dataclasses import dataclass

from src.errors import ConsistencyError
from src.graph import Graph
from src.linalg import QMatrix, QVector, nullspace_basis, rank_nullity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelBasis:
    """Canonical basis of N(A_G) and per-vertex support (core vertices)."""

    n: int
    basis: tuple[QVector, ...]
    support: tuple[bool, ...]

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def core_vertices(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.support[v - 1]]

    def is_orthogonal(self, vector: QVector) -> bool:
        return all(b.dot(vector) == 0 for b in self.basis)

    def integer_basis(self) -> list[tuple[int, ...]]:
        """Basis scaled to coprime integers (same span)."""
        return [b.integral() for b in self.basis]


def kernel(graph: Graph) -> KernelBasis:
    adjacency = graph.adjacency
    basis = tuple(nullspace_basis(adjacency))
    for vector in basis:
        if not (adjacency @ vector).is_zero():
            logger.error(f"Kernel basis vector {vector} fails A x = 0")
            raise ConsistencyError("Null-space vector is not in the kernel")

    support = tuple(any(b[k] != 0 for b in basis) for k in range(graph.n))
    return KernelBasis(n=graph.n, basis=basis, support=support)


def combine_full(basis: tuple[QVector, ...] | list[QVector]) -> QVector | None:
    """
    Greedy full combination of a basis.

    Start from the first vector; each later vector that reaches a missing
    coordinate is added with the smallest positive integer multiplier that
    zeroes none of the coordinates already nonzero.
    """
    if not basis:
        return None

    current = basis[0]
    for candidate in basis[1:]:
        if current.is_full():
            break
        covers_gap = any(c == 0 and b != 0 for c, b in zip(current, candidate))
        if not covers_gap:
            continue
        multiplier = 1
        while True:
            trial = current + candidate.scale(multiplier)
            if all(t != 0 for c, t in zip(current, trial) if c != 0):
                break
            multiplier += 1
        current = trial

    return current if current.is_full() else None


def full_kernel_vector(graph: Graph, basis: KernelBasis | None = None) -> QVector | None:
    """A kernel vector with no zero entry, when G is a core graph."""
    if basis is None:
        basis = kernel(graph)
    if basis.nullity == 0 or not all(basis.support):
        return None

    vector = combine_full(basis.basis)
    if vector is None or not (graph.adjacency @ vector).is_zero():
        logger.error(f"Greedy combination failed on a core graph (n={graph.n})")
        raise ConsistencyError("Core graph without a full kernel combination")
    return vector


def shifted_nullity(matrix: QMatrix, shift: int) -> int:
    """nullity(A - shift*I)"""
    _, nullity = rank_nullity(matrix - QMatrix.identity(matrix.rows).scale(shift))
    return nullity
