"""
Result of a graph construction with its certified kernel data.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

from src.ack import AckReport
from src.errors import ConsistencyError
from src.graph import Graph, emit_graph6
from src.linalg import QVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionResult:
    """Graph + certified kernel vectors + named hypothesis checks"""

    graph: Graph
    certified_kernel_vectors: tuple[QVector, ...] = ()
    hypothesis_report: dict[str, bool] = field(default_factory=dict)

    # Witness search on the built graph (when the construction runs one)
    ack: AckReport | None = None

    # Free-form provenance
    notes: tuple[str, ...] = ()
    details: dict = field(default_factory=dict)

    def failed_hypotheses(self) -> list[str]:
        return [name for name, ok in self.hypothesis_report.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "graph": {
                "n": self.graph.n,
                "edge_count": self.graph.edge_count,
                "graph6": emit_graph6(self.graph),
            },
            "certified_kernel_vectors": [v.to_strings() for v in self.certified_kernel_vectors],
            "hypothesis_report": dict(self.hypothesis_report),
            "ack": self.ack.to_dict() if self.ack is not None else None,
            "notes": list(self.notes),
            "details": self.details,
        }


def certify_kernel_vectors(graph: Graph, vectors: Sequence[QVector]) -> tuple[QVector, ...]:
    """Assert A_G v = 0 entry-exactly for every vector."""
    adjacency = graph.adjacency
    for vector in vectors:
        if len(vector) != graph.n:
            raise ConsistencyError(f"Certified vector has length {len(vector)}, graph has n={graph.n}")
        if vector.is_zero() or not (adjacency @ vector).is_zero():
            logger.error(f"Certified vector {vector} is not a nonzero kernel vector")
            raise ConsistencyError(f"Vector {vector} is not in N(A_G)")
    return tuple(vectors)
