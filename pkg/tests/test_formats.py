import networkx as nx
import pytest

from src.constructions import catalog, catalog_names, complete, path
from src.errors import GraphFormatError
from src.graph import (
    Graph,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
    write_graph,
)


def test_parse_k3():
    assert parse_graph6("Bw") == complete(3)


def test_emit_k2():
    assert emit_graph6(complete(2)) == "A_"


def test_parse_empty_graph_on_three_vertices():
    graph = parse_graph6("B?")

    assert graph.n == 3
    assert graph.edge_count == 0


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)


def test_graph6_round_trip_on_catalog():
    for name in catalog_names():
        graph = catalog(name).graph
        assert parse_graph6(emit_graph6(graph)) == graph


def test_graph6_matches_networkx():
    for name in catalog_names():
        graph = catalog(name).graph
        reference = nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()

        assert emit_graph6(graph) == reference
        assert Graph.from_networkx(nx.from_graph6_bytes(reference.encode("ascii"))) == graph


def test_long_form_graph6():
    graph = path(70)

    text = emit_graph6(graph)

    assert text.startswith("~")
    assert parse_graph6(text) == graph


def test_graph6_malformed_length():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6("B")

    assert excinfo.value.offset == 1
    assert "Malformed length" in str(excinfo.value)


def test_graph6_nonzero_padding():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6("Bx")

    assert excinfo.value.offset == 1


def test_graph6_character_out_of_range():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6("B ")

    assert excinfo.value.offset == 1


def test_parse_edge_list_k2():
    assert parse_edge_list("n 2\n1 2") == complete(2)


def test_parse_edge_list_with_comments():
    text = "# triangle\nn 3\n1 2  # first\n\n2 3\n3 1\n"

    assert parse_edge_list(text) == complete(3)


def test_parse_edge_list_out_of_range_reports_line():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list("n 3\n1 4")

    assert excinfo.value.line == 2
    assert "out of range" in str(excinfo.value)


def test_parse_edge_list_missing_header():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list("1 2\n")

    assert excinfo.value.line == 1


def test_parse_edge_list_g14_listing():
    text = "n 14\n" + "\n".join(f"{i} {j}" for i, j in catalog("G14").graph.sorted_edges())

    graph = parse_edge_list(text)

    assert graph == catalog("G14").graph
    assert graph.edge_count == 29


def test_edge_list_round_trip():
    graph = catalog("G18").graph

    assert parse_edge_list(emit_edge_list(graph, comment="G18")) == graph


def test_read_and_write_files(tmp_path):
    graph = catalog("E8").graph

    g6 = write_graph(graph, tmp_path / "e8.g6")
    edges = write_graph(graph, tmp_path / "e8.edges")

    assert read_graph(g6) == graph
    assert read_graph(edges) == graph


def test_unknown_suffix_rejected(tmp_path):
    target = tmp_path / "graph.bin"
    target.write_text("Bw\n", encoding="utf-8")

    with pytest.raises(GraphFormatError):
        read_graph(target)


def test_graph6_without_vertices_rejected():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6("?")

    assert excinfo.value.offset == 0


def test_graph6_truncated_size_field():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6("~A")

    assert excinfo.value.offset == 2
    assert "Truncated" in str(excinfo.value)


def test_graph6_offsets_count_the_header():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6(">>graph6<<Bx")

    assert excinfo.value.offset == len(">>graph6<<") + 1


def test_graph6_padding_checked_after_full_bytes():
    # n=4 has 6 pairs, so one data byte and no padding
    assert parse_graph6("C~") == complete(4)
