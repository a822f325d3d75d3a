"""
Batch verification over a directory of graph files.

Files are processed in a bounded thread pool; results are re-ordered by file
name before anything is written, so outputs do not depend on the worker
count.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path

from src.errors import ConsistencyError
from src.graph import read_graph
from src.graph.formats import EDGE_LIST_SUFFIXES, GRAPH6_SUFFIXES
from .report import Report, build_report

logger = logging.getLogger(__name__)

BATCH_SUFFIXES = GRAPH6_SUFFIXES | EDGE_LIST_SUFFIXES


@dataclass
class BatchItem:
    """Outcome for one input file"""

    file: str
    status: str  # ok, failed
    report: Report | None = None
    error: str | None = None
    internal_error: bool = False

    def summary_row(self) -> dict:
        ack = self.report.ack if self.report else {}
        return {
            "file": self.file,
            "status": self.status,
            "n": self.report.graph_summary["n"] if self.report else None,
            "ack_status": ack.get("status"),
            "witness": ack.get("witness"),
            "in_class_c": self.report.class_c["in_class_c"] if self.report else None,
            "error": self.error,
        }


def discover_inputs(directory: Path) -> list[Path]:
    return sorted(
        (p for p in Path(directory).iterdir() if p.is_file() and p.suffix.lower() in BATCH_SUFFIXES),
        key=lambda p: p.name,
    )


def _process(path: Path, limit_n: int | None) -> BatchItem:
    try:
        graph = read_graph(path)
        report = build_report(graph, {"kind": "file", "value": path.name}, limit_n=limit_n)
        return BatchItem(file=path.name, status="ok", report=report)
    except ConsistencyError as exc:
        logger.error(f"{path.name}: internal consistency failure: {exc}")
        return BatchItem(file=path.name, status="failed", error=f"internal: {exc}", internal_error=True)
    except (ValueError, OSError) as exc:
        logger.warning(f"{path.name}: {exc}")
        return BatchItem(file=path.name, status="failed", error=str(exc))


def run_batch(directory: Path, workers: int = 1, limit_n: int | None = None) -> list[BatchItem]:
    paths = discover_inputs(directory)
    logger.info(f"Batch: {len(paths)} files, {workers} worker(s)")

    results: dict[str, BatchItem] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {executor.submit(_process, path, limit_n): path for path in paths}
        for future in as_completed(futures):
            path = futures[future]
            try:
                results[path.name] = future.result()
            except Exception as exc:
                logger.error(f"{path.name}: unexpected failure: {exc}")
                results[path.name] = BatchItem(
                    file=path.name, status="failed", error=f"unexpected: {exc}", internal_error=True
                )

    return [results[name] for name in sorted(results)]


def write_batch_outputs(items: list[BatchItem], out_dir: Path, include_timings: bool = False) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for item in items:
        if item.report is not None:
            target = out_dir / f"{item.file}.json"
            target.write_text(item.report.to_json(include_timings=include_timings), encoding="utf-8")

    summary_path = out_dir / "summary.json"
    summary = {
        "files": len(items),
        "failed": sum(1 for item in items if item.status != "ok"),
        "results": [item.summary_row() for item in items],
    }
    summary_path.write_text(json.dumps(summary, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return summary_path


def format_summary_table(items: list[BatchItem]) -> str:
    header = f"{'file':<28} {'n':>4} {'status':<18} {'witness':<20} {'class C':<8}"
    lines = [header, "-" * len(header)]
    for item in items:
        row = item.summary_row()
        if item.status != "ok":
            lines.append(f"{item.file:<28} {'':>4} {'FAILED':<18} {item.error or ''}")
            continue
        witness = "{" + ",".join(str(v) for v in row["witness"]) + "}" if row["witness"] else "-"
        lines.append(
            f"{item.file:<28} {row['n']:>4} {row['ack_status']:<18} {witness:<20} "
            f"{'yes' if row['in_class_c'] else 'no':<8}"
        )
    return "\n".join(lines)
