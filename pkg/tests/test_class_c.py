from src.ack import ClassCReport, class_c_report
from src.constructions import catalog, complete, cycle, path, satellite


def test_e8_is_in_class_c():
    report = class_c_report(catalog("E8").graph)

    assert report.in_class_c
    assert report.failed_conditions() == []


def test_e10_and_e12_are_in_class_c():
    assert class_c_report(catalog("E10").graph).in_class_c
    assert class_c_report(catalog("E12").graph).in_class_c


def test_satellites_are_in_class_c():
    for k in range(3, 13):
        assert class_c_report(satellite(k).graph).in_class_c


def test_g14_fails_core_and_zero_main():
    report = class_c_report(catalog("G14").graph)

    assert "core" in report.failed_conditions()
    assert "zero_main" in report.failed_conditions()
    assert not report.in_class_c


def test_prism_fails_regularity_conditions():
    report = class_c_report(catalog("PRISM6").graph)

    # the rungs lie on no triangle
    assert report.failed_conditions() == ["zero_main", "edge_triangle", "non_regular"]


def test_bipartite_graphs_fail():
    assert "non_bipartite" in class_c_report(path(3)).failed_conditions()
    assert "non_bipartite" in class_c_report(cycle(4)).failed_conditions()


def test_nonsingular_graph_fails_core():
    report = class_c_report(complete(3))

    assert not report.core
    assert not report.non_regular
    assert not report.diameter_2_or_3


def test_report_dict_round_trip():
    report = class_c_report(catalog("NUT7").graph)
    data = report.to_dict()

    assert data["in_class_c"] == report.in_class_c
    assert ClassCReport.from_dict(data) == report
