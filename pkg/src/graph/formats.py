"""
Graph file formats: graph6 and plain edge lists.

graph6 vertices 0..n-1 map to labels 1..n. Edge lists look like:

    # optional comments
    n 4
    1 2
    2 3   # trailing comments too
"""

import logging
from pathlib import Path

import networkx as nx

from src.errors import GraphError, GraphFormatError
from .graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SUFFIXES = {".g6", ".graph6"}
EDGE_LIST_SUFFIXES = {".edges", ".edgelist", ".txt"}


# ============================================================
# graph6
# ============================================================

def emit_graph6(graph: Graph) -> str:
    nxg = nx.convert_node_labels_to_integers(graph.to_networkx(), ordering="sorted")
    try:
        data = nx.to_graph6_bytes(nxg, header=False)
    except ValueError as exc:
        raise GraphError(f"Graph too large for graph6: n={graph.n}") from exc
    return data.decode("ascii").strip()


def _size_field(values: list[int], base: int) -> tuple[int, int]:
    """Vertex count and the index where the edge bytes start."""
    if values[:2] == [63, 63]:
        width, start = 6, 2
    elif values[:1] == [63]:
        width, start = 3, 1
    else:
        return values[0], 1
    if len(values) < start + width:
        raise GraphFormatError("Truncated graph6 size field", offset=base + len(values))
    n = 0
    for value in values[start:start + width]:
        n = (n << 6) | value
    return n, start + width


def _check_graph6(line: str, base: int) -> None:
    """Byte-level checks networkx does not report with an offset."""
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"Character {ch!r} out of range", offset=base + k)
    values = [ord(ch) - 63 for ch in line]

    n, pos = _size_field(values, base)
    if n < 1:
        raise GraphFormatError("graph6 graph must have at least one vertex", offset=base)

    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    body = values[pos:]
    if len(body) != expected:
        raise GraphFormatError(
            f"Malformed length: expected {expected} data bytes for n={n}, got {len(body)}",
            offset=base + pos + min(len(body), expected),
        )

    padding = 6 * expected - pair_count
    if padding and body[-1] & ((1 << padding) - 1):
        raise GraphFormatError("Trailing padding bits are nonzero", offset=base + len(line) - 1)


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise GraphFormatError("Empty graph6 string", offset=base)

    _check_graph6(line, base)
    try:
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphFormatError(f"Invalid graph6 string: {exc}", offset=base) from exc
    return Graph.from_networkx(nxg)


# ============================================================
# Edge list
# ============================================================

def emit_edge_list(graph: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"n {graph.n}")
    lines.extend(f"{i} {j}" for i, j in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()

        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFormatError("Expected header 'n <count>'", line=number)
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"Vertex count {fields[1]!r} is not an integer", line=number)
            if n < 1:
                raise GraphFormatError(f"Vertex count must be >= 1, got {n}", line=number)
            continue

        if len(fields) != 2:
            raise GraphFormatError(f"Expected 'i j', got {content!r}", line=number)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"Non-integer vertex in {content!r}", line=number)
        if i == j:
            raise GraphFormatError(f"Self-loop at vertex {i}", line=number)
        for v in (i, j):
            if not 1 <= v <= n:
                raise GraphFormatError(f"Vertex {v} out of range 1..{n}", line=number)
        edges.append((i, j))

    if n is None:
        raise GraphFormatError("Missing header 'n <count>'", line=1)
    return Graph.from_edges(n, edges)


# ============================================================
# Files
# ============================================================

def detect_format(path: Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in GRAPH6_SUFFIXES:
        return "graph6"
    if suffix in EDGE_LIST_SUFFIXES:
        return "edgelist"
    raise GraphFormatError(f"Unknown graph file suffix {suffix!r} for {path}")


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    fmt = detect_format(path)
    text = path.read_text(encoding="utf-8")
    logger.debug(f"Reading {fmt} graph from {path}")

    if fmt == "edgelist":
        return parse_edge_list(text)

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError(f"No graph6 line in {path}", offset=0)
    if len(lines) > 1:
        raise GraphFormatError(f"Expected one graph6 line in {path}, found {len(lines)}", line=2)
    return parse_graph6(lines[0].strip())


def write_graph(graph: Graph, path: str | Path, fmt: str | None = None, comment: str | None = None) -> Path:
    path = Path(path)
    fmt = fmt or detect_format(path)
    if fmt == "graph6":
        text = emit_graph6(graph) + "\n"
    elif fmt == "edgelist":
        text = emit_edge_list(graph, comment=comment)
    else:
        raise ValueError(f"Unsupported format: {fmt}")

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"Wrote {fmt} graph (n={graph.n}) to {path}")
    return path
