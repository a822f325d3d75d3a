"""
ACK Witness Search

A witness is a nonempty S with chi_S in the row space of A_G and chi_S equal
to no row. For symmetric A the row space is N(A)^perp, so the search looks
for subsets orthogonal to the kernel basis.

Alur pencarian:
1. Hitung basis kernel (skala ke bilangan bulat)
2. Enumerasi subset per ukuran, urutan leksikografis
3. Subset yang ortogonal terhadap kernel dicek: apakah sama dengan baris A_G?
4. Subset pertama yang lolos = witness kanonik (minimal ukuran, lalu lex)
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from src.config import config
from src.errors import EdgelessGraphError, GraphError
from src.graph import Graph, VertexSet
from src.linalg import QVector, solve
from src.spectral import KernelBasis, kernel
from .zero_sum import orthogonal_subsets

logger = logging.getLogger(__name__)


class AckStatus(str, Enum):
    WITNESS_FOUND = "WITNESS_FOUND"
    NO_WITNESS = "NO_WITNESS"
    ABORTED_TOO_LARGE = "ABORTED_TOO_LARGE"


class AckMethod(str, Enum):
    ORTHOGONALITY_SEARCH = "ORTHOGONALITY_SEARCH"
    BRUTE_ORACLE = "BRUTE_ORACLE"
    DEGREE_PRUNED = "DEGREE_PRUNED"


@dataclass(frozen=True)
class AckReport:
    status: AckStatus
    witness: VertexSet | None
    method: AckMethod
    checked_count: int
    n: int

    @property
    def found(self) -> bool:
        return self.status == AckStatus.WITNESS_FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": self.witness.to_list() if self.witness is not None else None,
            "method": self.method.value,
            "checked_count": self.checked_count,
            "n": self.n,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AckReport":
        witness = data.get("witness")
        return cls(
            status=AckStatus(data["status"]),
            witness=VertexSet(tuple(witness)) if witness is not None else None,
            method=AckMethod(data["method"]),
            checked_count=int(data["checked_count"]),
            n=int(data["n"]),
        )


def _require_edge(graph: Graph) -> None:
    if graph.edge_count == 0:
        raise EdgelessGraphError()


def _check_01(graph: Graph, chi: QVector) -> None:
    if len(chi) != graph.n:
        raise GraphError(f"Vector length {len(chi)} does not match n={graph.n}")
    if not chi.is_01():
        raise GraphError(f"Vector {chi} has an entry outside {{0,1}}")


def is_in_row_space(graph: Graph, chi: QVector, basis: KernelBasis | None = None) -> bool:
    _check_01(graph, chi)
    if basis is None:
        basis = kernel(graph)
    return basis.is_orthogonal(chi)


def is_row(graph: Graph, chi: QVector) -> int | None:
    """Smallest vertex u with a^u = chi, if any."""
    _check_01(graph, chi)
    target = frozenset(chi.support())
    for u in graph.vertices:
        if graph.neighbor_set(u) == target:
            return u
    return None


def witness_checks(graph: Graph, witness: VertexSet, basis: KernelBasis | None = None) -> dict[str, bool]:
    """Three independent witness checks: kernel orthogonality, solve consistency, non-rowness."""
    chi = witness.characteristic(graph.n)
    if basis is None:
        basis = kernel(graph)
    return {
        "orthogonal_to_kernel": basis.is_orthogonal(chi),
        "solve_consistent": solve(graph.adjacency, chi) is not None,
        "not_a_row": is_row(graph, chi) is None,
    }


def searchable_sizes(n: int, limit_n: int) -> tuple[list[int], bool]:
    """
    Subset sizes to scan and whether the scan is exhaustive.

    Above the limit only the smallest sizes are scanned, as long as their
    total subset count stays within 2**limit_n.
    """
    if n <= limit_n:
        return list(range(1, n + 1)), True

    budget = 2 ** limit_n
    sizes = []
    spent = 0
    for s in range(1, n + 1):
        spent += comb(n, s)
        if spent > budget and sizes:
            break
        sizes.append(s)
    return sizes, len(sizes) == n


def ack_witness(
    graph: Graph,
    limit_n: int | None = None,
    use_degree_filter: bool = True,
    basis: KernelBasis | None = None,
) -> AckReport:
    """(size, lex)-first subset orthogonal to the kernel that is not a row."""
    _require_edge(graph)
    limit_n = config.ACKKIT_LIMIT_N if limit_n is None else limit_n
    if basis is None:
        basis = kernel(graph)

    vectors = basis.integer_basis()
    rows = {graph.neighbor_set(u) for u in graph.vertices}
    degrees = set(graph.degrees())
    sizes, exhaustive = searchable_sizes(graph.n, limit_n)

    logger.debug(
        f"Witness search: n={graph.n}, nullity={basis.nullity}, "
        f"sizes 1..{sizes[-1]}, exhaustive={exhaustive}"
    )

    checked = 0
    for size in sizes:
        # Rows of size s only exist when s is a degree
        skip_row_scan = use_degree_filter and size not in degrees
        for combo in orthogonal_subsets(vectors, graph.n, size):
            checked += 1
            labels = frozenset(k + 1 for k in combo)
            if not skip_row_scan and labels in rows:
                continue
            method = AckMethod.DEGREE_PRUNED if skip_row_scan else AckMethod.ORTHOGONALITY_SEARCH
            witness = VertexSet(tuple(labels))
            logger.debug(f"Witness {witness} after {checked} candidates")
            return AckReport(AckStatus.WITNESS_FOUND, witness, method, checked, graph.n)

    if not exhaustive:
        logger.warning(
            f"Search aborted: n={graph.n} exceeds limit_n={limit_n}, "
            f"no witness up to size {sizes[-1]}"
        )
        return AckReport(AckStatus.ABORTED_TOO_LARGE, None, AckMethod.ORTHOGONALITY_SEARCH, checked, graph.n)

    logger.warning(f"No witness exists for this graph (n={graph.n}, nullity={basis.nullity})")
    return AckReport(AckStatus.NO_WITNESS, None, AckMethod.ORTHOGONALITY_SEARCH, checked, graph.n)


def ack_brute_oracle(graph: Graph, limit_n: int | None = None) -> AckReport:
    """
    Definition-level check: chi_S in the row space iff A y = chi_S is
    consistent; non-rowness by comparing against every row. Same subset
    order as ack_witness.
    """
    _require_edge(graph)
    limit_n = config.ACKKIT_ORACLE_LIMIT_N if limit_n is None else limit_n
    if graph.n > limit_n:
        logger.warning(f"Oracle skipped: n={graph.n} exceeds limit_n={limit_n}")
        return AckReport(AckStatus.ABORTED_TOO_LARGE, None, AckMethod.BRUTE_ORACLE, 0, graph.n)

    adjacency = graph.adjacency
    rows = [adjacency.row(i) for i in range(graph.n)]

    checked = 0
    for size in range(1, graph.n + 1):
        for combo in combinations(graph.vertices, size):
            checked += 1
            chi = QVector.characteristic(graph.n, combo)
            if solve(adjacency, chi) is None:
                continue
            if any(chi == row for row in rows):
                continue
            return AckReport(AckStatus.WITNESS_FOUND, VertexSet(combo), AckMethod.BRUTE_ORACLE, checked, graph.n)

    return AckReport(AckStatus.NO_WITNESS, None, AckMethod.BRUTE_ORACLE, checked, graph.n)
