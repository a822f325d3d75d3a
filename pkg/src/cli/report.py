"""
Verification report: one JSON document per analysed graph.

Human-readable output is rendered from the same dictionary that is written as
JSON. Rationals are "p/q" strings. See docs/report_schema.md.
"""

import json
import logging
import time
from dataclasses import dataclass, field

from src.ack import AckStatus, ack_brute_oracle, ack_witness, class_c_report, witness_checks
from src.errors import ConsistencyError
from src.graph import Graph, emit_graph6
from src.spectral import classify, kernel

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class Report:
    schema_version: int
    input: dict
    graph_summary: dict
    spectral: dict
    class_c: dict
    ack: dict
    oracle: dict | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = True) -> dict:
        data = {
            "schema_version": self.schema_version,
            "input": self.input,
            "graph_summary": self.graph_summary,
            "spectral": self.spectral,
            "class_c": self.class_c,
            "ack": self.ack,
            "oracle": self.oracle,
        }
        if include_timings:
            data["timings"] = self.timings
        return data

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"Unsupported report schema_version: {version}")
        return cls(
            schema_version=version,
            input=data["input"],
            graph_summary=data["graph_summary"],
            spectral=data["spectral"],
            class_c=data["class_c"],
            ack=data["ack"],
            oracle=data.get("oracle"),
            timings=data.get("timings", {}),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @property
    def ack_status(self) -> AckStatus:
        return AckStatus(self.ack["status"])


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def summarize_graph(graph: Graph) -> dict:
    return {
        "n": graph.n,
        "edge_count": graph.edge_count,
        "degrees": graph.degree_sequence(),
        "graph6": emit_graph6(graph),
    }


def build_report(
    graph: Graph,
    provenance: dict,
    limit_n: int | None = None,
    oracle: bool = False,
    oracle_limit_n: int | None = None,
) -> Report:
    """Spectral profile, class-C verdicts and witness search for one graph."""
    timings = {}

    start = time.perf_counter()
    basis = kernel(graph)
    profile = classify(graph, basis)
    timings["spectral"] = _elapsed_ms(start)

    start = time.perf_counter()
    verdicts = class_c_report(graph, profile)
    timings["class_c"] = _elapsed_ms(start)

    start = time.perf_counter()
    search = ack_witness(graph, limit_n=limit_n, basis=basis)
    ack = search.to_dict()
    if search.found:
        checks = witness_checks(graph, search.witness, basis)
        if not all(checks.values()):
            logger.error(f"Witness {search.witness} failed independent checks: {checks}")
            raise ConsistencyError(f"Witness {search.witness} failed independent checks")
        ack["witness_checks"] = checks
    timings["ack"] = _elapsed_ms(start)

    oracle_section = None
    if oracle:
        start = time.perf_counter()
        brute = ack_brute_oracle(graph, limit_n=oracle_limit_n)
        decided = brute.status != AckStatus.ABORTED_TOO_LARGE and search.status != AckStatus.ABORTED_TOO_LARGE
        agrees = None
        if decided:
            agrees = brute.status == search.status and brute.witness == search.witness
            if not agrees:
                logger.error(f"Oracle disagreement: search={search.to_dict()} oracle={brute.to_dict()}")
                raise ConsistencyError("Witness search and brute oracle disagree")
        oracle_section = {**brute.to_dict(), "agrees": agrees}
        timings["oracle"] = _elapsed_ms(start)

    return Report(
        schema_version=SCHEMA_VERSION,
        input=provenance,
        graph_summary=summarize_graph(graph),
        spectral=profile.to_dict(),
        class_c=verdicts.to_dict(),
        ack=ack,
        oracle=oracle_section,
        timings=timings,
    )


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def render(data: dict, indent: int = 0) -> str:
    """Plain-text rendering of a report dictionary."""
    lines = []
    pad = "  " * indent
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render(value, indent + 1))
        else:
            lines.append(f"{pad}{key}: {_format_value(value)}")
    return "\n".join(line for line in lines if line)
