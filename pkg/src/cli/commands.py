"""
CLI command implementations.

Each command returns a process exit code:
    0  witness found / success
    1  internal consistency failure
    2  input error (bad file, bad parameters, failed construction precondition)
    3  exhaustive search found no witness
    4  search aborted by limit_n
"""

import json
import logging
from pathlib import Path

from src.ack import AckStatus, class_c_report
from src.config import config
from src.constructions import (
    ConstructionResult,
    add_vertex_dominating,
    catalog,
    catalog_names,
    complete,
    cycle,
    duplicate_vertices,
    k2_product_ack,
    multi_attach,
    nut_extension,
    path,
    satellite,
)
from src.errors import CatalogError, ConsistencyError, ConstructionError, EdgelessGraphError, GraphError
from src.graph import Graph, VertexSet, read_graph, write_graph
from .batch import format_summary_table, run_batch, write_batch_outputs
from .report import build_report, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_NO_WITNESS = 3
EXIT_ABORTED = 4

CATALOG_PREFIX = "catalog:"

STATUS_EXIT_CODES = {
    AckStatus.WITNESS_FOUND: EXIT_OK,
    AckStatus.NO_WITNESS: EXIT_NO_WITNESS,
    AckStatus.ABORTED_TOO_LARGE: EXIT_ABORTED,
}

FAMILIES = (
    "satellite",
    "catalog",
    "path",
    "cycle",
    "complete",
    "k2-product",
    "dominating",
    "nut-extension",
    "multi-attach",
    "duplicate",
)


# ============================================================
# Input helpers
# ============================================================

def resolve_input(target: str) -> tuple[Graph, dict]:
    """"catalog:NAME" or a graph file path."""
    if target.startswith(CATALOG_PREFIX):
        name = target[len(CATALOG_PREFIX):]
        entry = catalog(name)
        return entry.graph, {"kind": "catalog", "value": entry.name}
    graph = read_graph(target)
    return graph, {"kind": "file", "value": str(target)}


def parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise GraphError(f"Expected comma-separated vertices, got {text!r}")


def parse_sets(text: str) -> list[VertexSet]:
    """"3,5;13,15" -> [{3,5}, {13,15}]"""
    return [VertexSet(tuple(parse_vertex_list(chunk))) for chunk in text.split(";")]


def parse_plan(text: str) -> list[tuple[int, int]]:
    """"1:1,5:2" -> [(1, 1), (5, 2)]"""
    plan = []
    for chunk in (c.strip() for c in text.split(",")):
        if not chunk:
            continue
        vertex, _, multiplicity = chunk.partition(":")
        try:
            plan.append((int(vertex), int(multiplicity or "1")))
        except ValueError:
            raise GraphError(f"Bad plan item {chunk!r}, expected vertex:multiplicity")
    return plan


def _require(params: dict, key: str):
    value = params.get(key)
    if value is None:
        raise ConstructionError(f"--{key.replace('_', '-')} is required for this family", [f"{key}_given"])
    return value


def build_construction(family: str, params: dict) -> ConstructionResult:
    limit_n = params.get("limit_n")

    if family == "satellite":
        return satellite(int(_require(params, "k")))
    if family == "catalog":
        entry = catalog(_require(params, "name"))
        return ConstructionResult(
            graph=entry.graph,
            certified_kernel_vectors=entry.expected_kernel,
            hypothesis_report={"catalog_checks": True},
            notes=(entry.notes,),
        )
    if family in ("path", "cycle", "complete"):
        builder = {"path": path, "cycle": cycle, "complete": complete}[family]
        return ConstructionResult(graph=builder(int(_require(params, "n"))))

    base, _ = resolve_input(_require(params, "base"))
    if family == "k2-product":
        return k2_product_ack(base, limit_n=limit_n)
    if family == "dominating":
        return add_vertex_dominating(base, parse_sets(_require(params, "sets")), limit_n=limit_n)
    if family == "nut-extension":
        i, j = parse_vertex_list(_require(params, "pair"))
        return nut_extension(base, i, j)
    if family == "multi-attach":
        return multi_attach(base, parse_sets(_require(params, "sets")), limit_n=limit_n)
    if family == "duplicate":
        zero_sum = params.get("zero_sum")
        return duplicate_vertices(
            base,
            parse_plan(params.get("plan") or ""),
            zero_sum_subset=parse_vertex_list(zero_sum) if zero_sum else None,
            limit_n=limit_n,
        )
    raise ConstructionError(f"Unknown family {family!r}", ["known_family"])


def _fail(message: str, code: int) -> int:
    print(f"error: {message}")
    return code


# ============================================================
# Commands
# ============================================================

def cmd_construct(family: str, params: dict, out_path: str | None, fmt: str | None = None) -> int:
    try:
        result = build_construction(family, params)
        if out_path:
            written = write_graph(result.graph, out_path, fmt=fmt, comment=f"ackkit construct {family}")
            print(f"wrote {written} (n={result.graph.n}, edges={result.graph.edge_count})")
    except (ConstructionError, CatalogError, GraphError, OSError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    except ConsistencyError as exc:
        return _fail(f"internal consistency failure: {exc}", EXIT_INTERNAL)

    print(render(result.to_dict()))
    return EXIT_OK


def cmd_verify(
    target: str,
    oracle: bool = False,
    limit_n: int | None = None,
    as_json: bool = False,
    oracle_limit_n: int | None = None,
) -> int:
    try:
        graph, provenance = resolve_input(target)
        report = build_report(
            graph,
            provenance,
            limit_n=limit_n if limit_n is not None else config.ACKKIT_LIMIT_N,
            oracle=oracle,
            oracle_limit_n=oracle_limit_n,
        )
    except EdgelessGraphError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except (CatalogError, GraphError, OSError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    except ConsistencyError as exc:
        return _fail(f"internal consistency failure: {exc}", EXIT_INTERNAL)

    if as_json:
        print(report.to_json(), end="")
    else:
        print(render(report.to_dict()))
    return STATUS_EXIT_CODES[report.ack_status]


def cmd_classify(target: str, as_json: bool = False) -> int:
    try:
        graph, provenance = resolve_input(target)
        verdicts = class_c_report(graph)
    except (CatalogError, GraphError, OSError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)

    data = {"input": provenance, "class_c": verdicts.to_dict(), "failed": verdicts.failed_conditions()}
    if as_json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(render(data))
    return EXIT_OK


def cmd_batch(
    directory: str,
    parallel: int | None = None,
    json_out: str | None = None,
    limit_n: int | None = None,
    timings: bool = False,
) -> int:
    directory = Path(directory)
    if not directory.is_dir():
        return _fail(f"not a directory: {directory}", EXIT_INPUT)

    workers = parallel if parallel is not None else config.ACKKIT_WORKERS
    items = run_batch(directory, workers=workers, limit_n=limit_n)
    print(format_summary_table(items))
    if json_out:
        summary = write_batch_outputs(items, Path(json_out), include_timings=timings)
        print(f"\nreports written to {summary.parent}")

    if any(item.internal_error for item in items):
        return EXIT_INTERNAL
    if any(item.status != "ok" for item in items):
        return EXIT_INPUT
    statuses = {item.report.ack_status for item in items}
    if AckStatus.NO_WITNESS in statuses:
        return EXIT_NO_WITNESS
    if AckStatus.ABORTED_TOO_LARGE in statuses:
        return EXIT_ABORTED
    return EXIT_OK


def cmd_catalog(export_dir: str | None = None, fmt: str = "graph6") -> int:
    try:
        names = catalog_names()
    except CatalogError as exc:
        return _fail(str(exc), EXIT_INPUT)

    suffix = ".g6" if fmt == "graph6" else ".edges"
    for name in names:
        entry = catalog(name)
        print(f"{name:<12} n={entry.graph.n:<3} edges={entry.graph.edge_count:<3} "
              f"nullity={entry.expected_nullity}  {entry.notes}")
        if export_dir:
            write_graph(entry.graph, Path(export_dir) / f"{name}{suffix}", fmt=fmt, comment=entry.notes)

    if export_dir:
        print(f"\nexported {len(names)} graphs to {export_dir}")
    return EXIT_OK
