from fractions import Fraction

import pytest

from src.ack import AckStatus
from src.constructions import (
    add_vertex_dominating,
    catalog,
    complete,
    cycle,
    duplicate_vertices,
    k2_product_ack,
    multi_attach,
    nut_extension,
    satellite,
)
from src.errors import ConstructionError, GraphError
from src.graph import VertexSet
from src.linalg import QVector
from src.spectral import classify, nullity
from tests.corpus import atlas_graphs, random_connected_graphs


def _nut7_base():
    return catalog("NUT7").graph.remove_vertex(7)


def _check_nut_extension_pairs(graphs):
    for base in graphs:
        if classify(base).nullity != 0:
            continue
        for i in base.vertices:
            for j in range(i + 1, base.n + 1):
                result = nut_extension(base, i, j)
                assert result.hypothesis_report["equivalence_holds"]


# ------------------------------------------------------------
# K2 x H
# ------------------------------------------------------------

def test_k2_product_with_h5():
    result = k2_product_ack(catalog("H5").graph)
    report = result.hypothesis_report

    assert result.graph.n == 10
    assert report["swapped_variant_ok"]
    assert report["hypotheses_hold"]
    assert report["nullity_identity_ok"]
    assert result.details == {"mult_plus1": 0, "mult_minus1": 1, "nullity": 1}
    assert result.ack.status == AckStatus.WITNESS_FOUND


def test_k2_product_certifies_symmetric_vector():
    result = k2_product_ack(catalog("H5").graph)
    (vector,) = result.certified_kernel_vectors

    assert list(vector)[:5] == list(vector)[5:]


def test_k2_product_with_k3_is_prism():
    result = k2_product_ack(complete(3))

    assert result.graph == catalog("PRISM6").graph
    assert not result.hypothesis_report["hypotheses_hold"]
    assert result.details["nullity"] == 2
    assert len(result.certified_kernel_vectors) == 2


def test_k2_product_with_c9():
    result = k2_product_ack(cycle(9))

    assert not result.hypothesis_report["swapped_variant_ok"]
    assert result.details == {"mult_plus1": 0, "mult_minus1": 2, "nullity": 2}
    assert result.ack.found


def test_k2_product_nullity_identity_on_random_graphs():
    for base in random_connected_graphs(50, 3, 7, seed=99):
        result = k2_product_ack(base)
        details = result.details
        assert details["nullity"] == details["mult_plus1"] + details["mult_minus1"]
        assert result.hypothesis_report["diameter_relation"]


# ------------------------------------------------------------
# Dominating-vertex additions
# ------------------------------------------------------------

def test_dominating_addition_on_g18():
    result = add_vertex_dominating(catalog("G18").graph, [[3, 5], [13, 15]])

    assert result.graph.n == 20
    assert result.graph.neighborhood(19) == VertexSet.of(1, 3, 5)
    assert result.graph.neighborhood(20) == VertexSet.of(1, 13, 15)
    assert result.failed_hypotheses() == []
    assert result.ack.found


def test_single_dominating_addition_on_g18():
    result = add_vertex_dominating(catalog("G18").graph, [[3, 5]])
    (vector,) = result.certified_kernel_vectors

    assert vector.coordinate(19) == 0
    assert result.ack.found


def test_dominating_addition_rejects_overlapping_sets():
    with pytest.raises(ConstructionError) as excinfo:
        add_vertex_dominating(catalog("G18").graph, [[3, 5], [5, 13]])

    assert "sets_pairwise_disjoint" in excinfo.value.failed_checks


def test_dominating_addition_needs_zero_first_coordinate():
    with pytest.raises(ConstructionError) as excinfo:
        add_vertex_dominating(satellite(3).graph, [[2, 5]])

    assert "kernel_coordinate_1_zero" in excinfo.value.failed_checks


def test_dominating_addition_rejects_neighborhood():
    graph = catalog("G18").graph

    with pytest.raises(ConstructionError) as excinfo:
        add_vertex_dominating(graph, [sorted(graph.neighbor_set(13))])

    assert "sets_non_duplicate" in excinfo.value.failed_checks


def test_dominating_addition_rejects_empty_plan():
    with pytest.raises(ConstructionError) as excinfo:
        add_vertex_dominating(catalog("G18").graph, [])

    assert excinfo.value.failed_checks == ["at_least_one_set"]


# ------------------------------------------------------------
# Nut extension
# ------------------------------------------------------------

def test_nut_extension_rebuilds_nut7():
    result = nut_extension(_nut7_base(), 5, 6)

    assert result.graph == catalog("NUT7").graph
    assert result.hypothesis_report == {
        "quadratic_zero": True,
        "column_sum_full": True,
        "is_nut": True,
        "equivalence_holds": True,
    }
    assert result.certified_kernel_vectors == (QVector.of([1, 1, -1, -1, -1, 1, -1]),)


def test_nut_extension_of_k2():
    result = nut_extension(complete(2), 1, 2)

    assert result.details["quadratic_form"] == "2/1"
    assert not result.hypothesis_report["is_nut"]
    assert result.certified_kernel_vectors == ()


def test_nut_extension_preconditions():
    with pytest.raises(ConstructionError) as excinfo:
        nut_extension(complete(2), 1, 1)
    assert excinfo.value.failed_checks == ["distinct_pair"]

    with pytest.raises(ConstructionError) as excinfo:
        nut_extension(cycle(4), 1, 2)
    assert excinfo.value.failed_checks == ["invertible_base"]

    with pytest.raises(GraphError):
        nut_extension(complete(2), 1, 3)


def test_nut_extension_criterion_on_small_atlas():
    _check_nut_extension_pairs(atlas_graphs(5, connected_only=False))


@pytest.mark.slow
def test_nut_extension_criterion_on_six_vertices():
    _check_nut_extension_pairs(atlas_graphs(6, connected_only=False))


# ------------------------------------------------------------
# Multi-attach
# ------------------------------------------------------------

def test_multi_attach_on_h8():
    result = multi_attach(catalog("H8").graph, [[6, 8], [1, 2]])
    half = Fraction(1, 2)

    assert result.details["BC"][0] == QVector.of([-1, 1, half, -half, half, -1, -half, 1]).to_strings()
    assert result.details["BC"][1] == QVector.of([1, -1, -half, half, half, 1, -half, -1]).to_strings()
    assert result.hypothesis_report["BC_full"]
    assert result.hypothesis_report["CtBC_zero"]
    assert result.hypothesis_report["is_core"]
    assert result.details["nullity"] >= 2
    assert len(result.certified_kernel_vectors) == 2
    assert result.ack.found


def test_multi_attach_certified_vectors_end_with_minus_unit():
    result = multi_attach(catalog("H8").graph, [[6, 8], [1, 2]])
    first, second = result.certified_kernel_vectors

    assert list(first)[8:] == [-1, 0]
    assert list(second)[8:] == [0, -1]


def test_multi_attach_hypotheses_fail_on_k2():
    result = multi_attach(complete(2), [[1]])

    assert result.hypothesis_report == {
        "BC_full": False,
        "CtBC_zero": True,
        "some_Si_not_a_neighborhood": False,
    }
    assert result.ack is None
    assert result.certified_kernel_vectors == ()


def test_multi_attach_preconditions():
    with pytest.raises(ConstructionError) as excinfo:
        multi_attach(catalog("H8").graph, [[], [9]])
    assert excinfo.value.failed_checks == ["sets_nonempty", "sets_in_range"]

    with pytest.raises(ConstructionError) as excinfo:
        multi_attach(cycle(4), [[1]])
    assert excinfo.value.failed_checks == ["invertible_base"]


# ------------------------------------------------------------
# Duplication
# ------------------------------------------------------------

def test_duplicate_nut7():
    result = duplicate_vertices(catalog("NUT7").graph, [(1, 1), (5, 2)], zero_sum_subset=[2, 3])
    graph = result.graph

    assert graph.n == 10
    assert graph.neighborhood(8) == graph.neighborhood(1)
    assert graph.neighborhood(9) == graph.neighborhood(5)
    assert graph.neighborhood(10) == graph.neighborhood(5)
    assert result.certified_kernel_vectors[0] == QVector.of([3, 6, -6, -6, -2, 6, -6, 3, -2, -2])
    assert result.certified_kernel_vectors[1:] == (
        QVector.unit(10, 1) - QVector.unit(10, 8),
        QVector.unit(10, 5) - QVector.unit(10, 9),
        QVector.unit(10, 5) - QVector.unit(10, 10),
    )
    assert result.failed_hypotheses() == []
    assert result.details["nullity"] >= 4
    assert result.ack.found


def test_duplicate_nut7_is_core():
    graph = duplicate_vertices(catalog("NUT7").graph, [(1, 1), (5, 2)]).graph

    assert classify(graph).is_core


def test_duplicating_adjacent_vertices_keeps_twins():
    base = catalog("NUT7").graph
    result = duplicate_vertices(base, [(1, 1), (2, 1)])
    graph = result.graph

    # vertex 8 copies 1, vertex 9 copies 2, and 1 ~ 2
    assert graph.neighborhood(8) == graph.neighborhood(1)
    assert graph.neighborhood(9) == graph.neighborhood(2)
    assert nullity(graph) >= nullity(base) + 2


def test_duplicate_flags_bad_subset():
    result = duplicate_vertices(catalog("NUT7").graph, [(1, 1)], zero_sum_subset=[1, 3])

    assert result.hypothesis_report["subset_zero_sum"]
    assert not result.hypothesis_report["subset_non_duplicate"]
    assert not result.hypothesis_report["subset_disjoint_from_duplicated"]


def test_duplicate_needs_nut_graph():
    with pytest.raises(ConstructionError) as excinfo:
        duplicate_vertices(catalog("PRISM6").graph, [(1, 1)])

    assert excinfo.value.failed_checks == ["base_is_nut"]


def test_duplicate_plan_checks():
    with pytest.raises(ConstructionError) as excinfo:
        duplicate_vertices(catalog("NUT7").graph, [(1, 0), (1, 1), (9, 1)])

    assert excinfo.value.failed_checks == [
        "vertices_in_range",
        "vertices_distinct",
        "multiplicities_positive",
    ]


def test_duplicate_satellites():
    for k in (3, 4, 5):
        result = duplicate_vertices(satellite(k).graph, [(2, 1), (k + 2, 2)])
        assert result.hypothesis_report["is_core"]
        assert result.ack.found
