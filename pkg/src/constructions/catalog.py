"""
Built-in catalog of concrete graphs.

Every entry carries known kernel vectors (up to scale) and its nullity.
Both are checked when the catalog is built; a failed check aborts the build.
"""

import logging
import threading
from dataclasses import dataclass

from src.config import config
from src.errors import CatalogChecksumError, CatalogError
from src.graph import Graph
from src.linalg import QMatrix, QVector
from src.spectral import nullity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected_kernel: tuple[QVector, ...]
    expected_nullity: int
    notes: str = ""
    expected_degrees: tuple[int, ...] | None = None  # sorted multiset

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.graph.n,
            "edge_count": self.graph.edge_count,
            "expected_nullity": self.expected_nullity,
            "expected_kernel": [v.to_strings() for v in self.expected_kernel],
            "notes": self.notes,
        }


def _dominated(n: int, extra: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertex 1 joined to 2..n, plus the given edges."""
    return [(1, v) for v in range(2, n + 1)] + extra


def _ring(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[k], vertices[(k + 1) % len(vertices)]) for k in range(len(vertices))]


_G14_EDGES = [
    (1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12),
    (1, 13), (1, 14), (2, 3), (2, 10), (2, 11), (3, 4), (3, 5), (4, 5), (4, 12), (5, 6),
    (6, 7), (6, 8), (6, 13), (7, 8), (7, 9), (8, 9), (8, 10), (8, 14), (9, 10),
]

_H8_MATRIX = [
    [0, 0, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 1],
    [1, 0, 0, 0, 1, 0, 1, 1],
    [0, 1, 0, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 1, 0, 1],
    [1, 1, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0, 0],
]


def _graph_from_matrix(rows: list[list[int]]) -> Graph:
    matrix = QMatrix.from_rows(rows)
    if not matrix.symmetric:
        raise CatalogChecksumError("Catalog adjacency matrix is not symmetric")
    n = matrix.rows
    return Graph.from_edges(n, [
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if matrix.entry(i, j) != 0
    ])


def _raw_entries() -> list[CatalogEntry]:
    v = QVector.of
    return [
        CatalogEntry(
            name="PRISM6",
            graph=Graph.from_edges(6, [
                (1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6),
            ]),
            expected_kernel=(v([1, -1, 0, 1, -1, 0]), v([1, 0, -1, 1, 0, -1])),
            expected_nullity=2,
            notes="Core graph which is not a nut graph (triangular prism, K2 x K3)",
        ),
        CatalogEntry(
            name="NUT7",
            graph=Graph.from_edges(7, [
                (1, 2), (1, 3), (1, 4), (1, 6), (2, 5), (3, 4), (5, 7), (6, 7),
            ]),
            expected_kernel=(v([1, 1, -1, -1, -1, 1, -1]),),
            expected_nullity=1,
            notes="7-vertex nut graph: vertex 7 joined to 5 and 6 of a nonsingular base",
        ),
        CatalogEntry(
            name="E8",
            graph=Graph.from_edges(8, _dominated(8, _ring([2, 3, 4, 5, 6, 7]) + [
                (4, 8), (4, 6), (5, 7), (2, 6), (3, 6),
            ])),
            expected_kernel=(v([1, 1, -1, -1, -1, -1, 1, 2]),),
            expected_nullity=1,
            notes="E_{2k} for k = 4",
            expected_degrees=(2, 4, 4, 4, 4, 5, 6, 7),
        ),
        CatalogEntry(
            name="E10",
            graph=Graph.from_edges(10, _dominated(10, _ring([2, 3, 4, 5, 6, 7, 8]) + [
                (4, 9), (6, 10), (4, 6), (5, 7), (3, 8), (2, 6),
            ])),
            expected_kernel=(v([1, -1, -1, -1, -1, -1, 1, 1, 2, 1]),),
            expected_nullity=1,
            notes="E_{2k} for k = 5",
        ),
        CatalogEntry(
            name="E12",
            graph=Graph.from_edges(12, _dominated(12, _ring([2, 3, 4, 5, 6, 7, 8, 9]) + [
                (2, 10), (4, 11), (6, 12), (4, 6), (5, 7), (3, 8), (6, 9),
            ])),
            expected_kernel=(
                v([1, -1, -1, -1, -1, -1, 1, 1, -1, 1, 2, 1]),
                v([0, 0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 1]),
            ),
            # The drawn edge set carries a second kernel vector: core, not nut.
            expected_nullity=2,
            notes="E_{2k} for k = 6 as drawn; nullity 2",
        ),
        CatalogEntry(
            name="G14",
            graph=Graph.from_edges(14, _G14_EDGES),
            expected_kernel=(v([0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 0, -1, 0]),),
            expected_nullity=1,
            notes="14 vertices, ACK holds with witness size equal to a degree; 0 not main",
            expected_degrees=(2, 2, 2, 2, 3, 4, 4, 4, 4, 4, 4, 5, 6, 12),
        ),
        CatalogEntry(
            name="G14_FIGURE",
            graph=Graph.from_edges(14, _G14_EDGES + [(1, 5)]),
            expected_kernel=(v([0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 0, -1, 0]),),
            expected_nullity=1,
            notes="G14 with the dominating edge {1,5} as drawn",
            expected_degrees=(2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 5, 6, 13),
        ),
        CatalogEntry(
            name="G18",
            graph=Graph.from_edges(18, _dominated(18, _ring(list(range(2, 13))) + [
                (2, 13), (4, 14), (6, 15), (8, 16), (10, 17), (12, 18),
                (4, 6), (6, 9), (7, 11), (14, 16),
            ])),
            expected_kernel=(v([0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0]),),
            expected_nullity=1,
            notes="18-vertex base for dominating-vertex additions (a^3 - a^5 + a^15 - a^13 = 0)",
        ),
        CatalogEntry(
            name="H5",
            graph=Graph.from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)]),
            expected_kernel=(),
            expected_nullity=0,
            notes="-1 simple, +1 absent; K2 x H5 satisfies ACK",
        ),
        CatalogEntry(
            name="H8",
            graph=_graph_from_matrix(_H8_MATRIX),
            expected_kernel=(),
            expected_nullity=0,
            notes="Invertible base (det 4) for attaching {6,8} and {1,2}",
        ),
    ]


def check_entry(entry: CatalogEntry) -> None:
    """Load-time certification; raises CatalogChecksumError."""
    graph = entry.graph

    # Step 1: every expected kernel vector, as a row dependence
    for x in entry.expected_kernel:
        combination = QVector.zeros(graph.n)
        for u in graph.vertices:
            combination = combination + graph.adjacency_vector(u).scale(x.coordinate(u))
        if len(x) != graph.n or not combination.is_zero():
            raise CatalogChecksumError(f"{entry.name}: kernel vector {x} fails A x = 0")

    # Step 2: nullity
    computed = nullity(graph)
    if computed != entry.expected_nullity:
        raise CatalogChecksumError(
            f"{entry.name}: expected nullity {entry.expected_nullity}, computed {computed}"
        )

    # Step 3: degree multiset, where one is recorded
    if entry.expected_degrees is not None and tuple(graph.degree_sequence()) != entry.expected_degrees:
        raise CatalogChecksumError(
            f"{entry.name}: degree multiset {graph.degree_sequence()} != {list(entry.expected_degrees)}"
        )
    logger.debug(f"Catalog entry {entry.name} certified (n={graph.n}, nullity={computed})")


def build_catalog(run_checks: bool = True) -> dict[str, CatalogEntry]:
    entries = {}
    for entry in _raw_entries():
        if run_checks:
            try:
                check_entry(entry)
            except CatalogChecksumError as exc:
                logger.error(f"Catalog checksum failed: {exc}")
                raise
        entries[entry.name] = entry
    return entries


_catalog: dict[str, CatalogEntry] | None = None
_catalog_lock = threading.Lock()


def get_catalog() -> dict[str, CatalogEntry]:
    """Get or build the catalog singleton."""
    global _catalog
    if _catalog is None:
        with _catalog_lock:
            if _catalog is None:
                _catalog = build_catalog(run_checks=config.ACKKIT_CATALOG_CHECKS)
    return _catalog


def catalog_names() -> list[str]:
    return list(get_catalog().keys())


def catalog(name: str) -> CatalogEntry:
    entries = get_catalog()
    key = name.strip().upper()
    if key not in entries:
        raise CatalogError(f"Unknown catalog entry {name!r} (known: {', '.join(entries)})")
    return entries[key]
