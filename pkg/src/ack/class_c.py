"""
Necessary conditions for a potential ACK counterexample (class C).
"""

from dataclasses import dataclass, fields

from src.graph import Graph, structural_predicates
from src.spectral import SpectralProfile, classify


@dataclass(frozen=True)
class ClassCReport:
    core: bool
    zero_main: bool
    vertex_triangle: bool
    edge_triangle: bool
    non_regular: bool
    connected: bool
    non_bipartite: bool
    diameter_2_or_3: bool

    CONDITIONS = (
        "core",
        "zero_main",
        "vertex_triangle",
        "edge_triangle",
        "non_regular",
        "connected",
        "non_bipartite",
        "diameter_2_or_3",
    )

    @property
    def in_class_c(self) -> bool:
        return all(getattr(self, name) for name in self.CONDITIONS)

    def failed_conditions(self) -> list[str]:
        return [name for name in self.CONDITIONS if not getattr(self, name)]

    def to_dict(self) -> dict:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["in_class_c"] = self.in_class_c
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ClassCReport":
        return cls(**{name: bool(data[name]) for name in cls.CONDITIONS})


def class_c_report(graph: Graph, profile: SpectralProfile | None = None) -> ClassCReport:
    if profile is None:
        profile = classify(graph)
    predicates = structural_predicates(graph)

    return ClassCReport(
        core=profile.is_core,
        zero_main=profile.zero_is_main,
        vertex_triangle=predicates.every_vertex_on_triangle,
        edge_triangle=predicates.every_edge_on_triangle,
        non_regular=not predicates.regular,
        connected=predicates.connected,
        non_bipartite=not predicates.bipartite,
        diameter_2_or_3=predicates.diameter in (2, 3),
    )
