"""
Spectral classification at the eigenvalues 0, +1 and -1.

All multiplicities come from exact nullities of A, A - I and A + I; no
eigensolver is involved.
"""

import logging
from dataclasses import dataclass

from src.errors import ConsistencyError, GraphError
from src.graph import Graph
from src.linalg import QVector, adjugate, determinant
from .kernel import KernelBasis, full_kernel_vector, kernel, shifted_nullity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralProfile:
    nullity: int
    is_core: bool
    is_nut: bool
    zero_is_main: bool
    mult_plus1: int
    mult_minus1: int
    full_kernel_vector: QVector | None = None

    def to_dict(self) -> dict:
        return {
            "nullity": self.nullity,
            "is_core": self.is_core,
            "is_nut": self.is_nut,
            "zero_is_main": self.zero_is_main,
            "mult_plus1": self.mult_plus1,
            "mult_minus1": self.mult_minus1,
            "full_kernel_vector": (
                self.full_kernel_vector.to_strings() if self.full_kernel_vector is not None else None
            ),
        }


def classify(graph: Graph, basis: KernelBasis | None = None) -> SpectralProfile:
    if basis is None:
        basis = kernel(graph)

    is_core = basis.nullity > 0 and all(basis.support)
    # nut: nullity 1 and the single basis vector is full
    is_nut = basis.nullity == 1 and basis.basis[0].is_full()
    zero_is_main = any(b.total() != 0 for b in basis.basis)

    adjacency = graph.adjacency
    return SpectralProfile(
        nullity=basis.nullity,
        is_core=is_core,
        is_nut=is_nut,
        zero_is_main=zero_is_main,
        mult_plus1=shifted_nullity(adjacency, 1),
        mult_minus1=shifted_nullity(adjacency, -1),
        full_kernel_vector=full_kernel_vector(graph, basis) if is_core else None,
    )


def nullity(graph: Graph) -> int:
    return kernel(graph).nullity


def is_nut_by_adjugate(graph: Graph) -> bool:
    """det(A) = 0 and adj(A) has no zero entry."""
    adjacency = graph.adjacency
    if determinant(adjacency) != 0:
        return False
    return adjugate(adjacency).is_full()


def is_parter(graph: Graph, base: Graph, v: int) -> bool:
    """
    True iff nullity(G) = nullity(G - v) - 1.

    When the base is singular and a^v is a nonzero, non-duplicated vector, the
    row-space characterization is computed as well and must agree.
    """
    if not 1 <= v <= graph.n:
        raise GraphError(f"Vertex {v} out of range 1..{graph.n}", vertex=v)
    if graph.remove_vertex(v) != base:
        raise GraphError(f"Base graph is not G with vertex {v} deleted", vertex=v)

    base_kernel = kernel(base)
    result = nullity(graph) == base_kernel.nullity - 1

    # a^v seen from the base: neighbors of v, relabeled into the base
    attached = [u if u < v else u - 1 for u in graph.neighbor_set(v)]
    a_v = QVector.characteristic(base.n, attached)
    duplicated = any(a_v == base.adjacency_vector(u) for u in base.vertices)

    if base_kernel.nullity > 0 and attached and not duplicated:
        predicted = not base_kernel.is_orthogonal(a_v)
        if predicted != result:
            logger.error(
                f"Parter check disagrees for v={v}: nullity says {result}, "
                f"row-space test says {predicted}"
            )
            raise ConsistencyError(f"Parter characterization disagrees at vertex {v}")
        logger.debug(f"Parter cross-check agreed for v={v} ({result})")

    return result
