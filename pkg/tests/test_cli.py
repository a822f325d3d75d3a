import json

import pytest

from main import main
from src.cli import commands
from src.cli.batch import run_batch, write_batch_outputs
from src.cli.report import SCHEMA_VERSION, Report, build_report, render
from src.constructions import catalog, satellite
from src.graph import read_graph, write_graph


def _corpus(directory, names=("NUT7", "E8", "PRISM6", "H8")):
    directory.mkdir(parents=True, exist_ok=True)
    for k, name in enumerate(names):
        suffix = ".g6" if k % 2 == 0 else ".edges"
        write_graph(catalog(name).graph, directory / f"{name}{suffix}")
    return directory


def test_report_round_trip():
    report = build_report(catalog("NUT7").graph, {"kind": "catalog", "value": "NUT7"}, limit_n=24)

    assert report.schema_version == SCHEMA_VERSION
    assert Report.from_json(report.to_json()) == report
    assert report.ack["witness"] == [2, 3]
    assert report.ack["witness_checks"]["not_a_row"] is True


def test_report_rejects_unknown_schema_version():
    data = build_report(catalog("E8").graph, {"kind": "catalog", "value": "E8"}).to_dict()
    data["schema_version"] = 99

    with pytest.raises(ValueError):
        Report.from_dict(data)


def test_report_without_timings():
    report = build_report(catalog("E8").graph, {"kind": "catalog", "value": "E8"})

    assert "timings" not in report.to_dict(include_timings=False)
    assert set(report.timings) == {"spectral", "class_c", "ack"}


def test_oracle_section():
    report = build_report(catalog("NUT7").graph, {"kind": "catalog", "value": "NUT7"}, oracle=True)

    assert report.oracle["agrees"] is True
    assert report.oracle["method"] == "BRUTE_ORACLE"


def test_render_uses_yes_no_and_dash():
    text = render({"spectral": {"is_nut": True, "vector": None}, "witness": [1, 3]})

    assert text == "spectral:\n  is_nut: yes\n  vector: -\nwitness: (1, 3)"


def test_verify_catalog_entry(capsys):
    code = commands.cmd_verify("catalog:NUT7")

    assert code == commands.EXIT_OK
    assert "WITNESS_FOUND" in capsys.readouterr().out


def test_verify_json_with_oracle(capsys):
    code = commands.cmd_verify("catalog:E8", oracle=True, as_json=True)
    data = json.loads(capsys.readouterr().out)

    assert code == 0
    assert data["ack"]["witness"] == [1, 3]
    assert data["oracle"]["agrees"] is True
    assert data["class_c"]["in_class_c"] is True


def test_verify_aborted_exit_code(capsys):
    assert commands.cmd_verify("catalog:NUT7", limit_n=3) == commands.EXIT_ABORTED


def test_verify_input_errors(tmp_path, capsys):
    edgeless = tmp_path / "empty.edges"
    edgeless.write_text("n 3\n", encoding="utf-8")
    broken = tmp_path / "broken.g6"
    broken.write_text("B\n", encoding="utf-8")

    assert commands.cmd_verify(str(edgeless)) == commands.EXIT_INPUT
    assert commands.cmd_verify(str(broken)) == commands.EXIT_INPUT
    assert commands.cmd_verify("catalog:NOPE") == commands.EXIT_INPUT
    assert "error:" in capsys.readouterr().out


def test_classify_json(capsys):
    code = commands.cmd_classify("catalog:G14", as_json=True)
    data = json.loads(capsys.readouterr().out)

    assert code == 0
    assert data["input"] == {"kind": "catalog", "value": "G14"}
    assert "core" in data["failed"]
    assert data["class_c"]["in_class_c"] is False


def test_construct_satellite_to_file(tmp_path, capsys):
    target = tmp_path / "s7.g6"

    code = commands.cmd_construct("satellite", {"k": 3}, str(target))

    assert code == 0
    assert read_graph(target) == satellite(3).graph
    assert "is_nut: yes" in capsys.readouterr().out


def test_construct_rejects_bad_parameters(capsys):
    assert commands.cmd_construct("satellite", {"k": 2}, None) == commands.EXIT_INPUT
    assert "k_at_least_3" in capsys.readouterr().out

    assert commands.cmd_construct("dominating", {"sets": "3,5"}, None) == commands.EXIT_INPUT


def test_construct_operations_from_catalog(tmp_path):
    params = {"base": "catalog:G18", "sets": "3,5;13,15"}

    assert commands.cmd_construct("dominating", params, str(tmp_path / "f20.edges")) == 0
    assert read_graph(tmp_path / "f20.edges").n == 20

    params = {"base": "catalog:NUT7", "plan": "1:1,5:2", "zero_sum": "2,3"}
    assert commands.cmd_construct("duplicate", params, str(tmp_path / "f.g6")) == 0
    assert read_graph(tmp_path / "f.g6").n == 10


def test_parse_helpers():
    assert commands.parse_plan("1:1, 5:2,7") == [(1, 1), (5, 2), (7, 1)]
    assert [s.to_list() for s in commands.parse_sets("3,5;13,15")] == [[3, 5], [13, 15]]
    assert commands.parse_vertex_list("5,6") == [5, 6]


def test_catalog_export(tmp_path, capsys):
    code = commands.cmd_catalog(export_dir=str(tmp_path), fmt="edgelist")

    assert code == 0
    assert read_graph(tmp_path / "G14.edges") == catalog("G14").graph
    assert "NUT7" in capsys.readouterr().out


def test_batch_output_is_independent_of_worker_count(tmp_path):
    corpus = _corpus(tmp_path / "corpus")

    serial = run_batch(corpus, workers=1)
    parallel = run_batch(corpus, workers=8)
    write_batch_outputs(serial, tmp_path / "one")
    write_batch_outputs(parallel, tmp_path / "eight")

    names = sorted(p.name for p in (tmp_path / "one").iterdir())
    assert names == sorted(p.name for p in (tmp_path / "eight").iterdir())
    assert "summary.json" in names
    for name in names:
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "eight" / name).read_bytes()


def test_batch_command_with_malformed_file(tmp_path, capsys):
    corpus = _corpus(tmp_path / "corpus", names=("NUT7", "E8"))
    (corpus / "zz_broken.g6").write_text("Bx\n", encoding="utf-8")

    code = commands.cmd_batch(str(corpus), parallel=2, json_out=str(tmp_path / "out"))
    summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))

    assert code == commands.EXIT_INPUT
    assert summary["files"] == 3
    assert summary["failed"] == 1
    assert [row["file"] for row in summary["results"]] == ["E8.edges", "NUT7.g6", "zz_broken.g6"]
    assert "FAILED" in capsys.readouterr().out


def test_batch_command_success(tmp_path, capsys):
    corpus = _corpus(tmp_path / "corpus")

    assert commands.cmd_batch(str(corpus), parallel=4) == commands.EXIT_OK
    assert commands.cmd_batch(str(tmp_path / "missing")) == commands.EXIT_INPUT


def test_main_dispatch(capsys):
    assert main(["verify", "catalog:NUT7"]) == 0
    assert main(["classify", "catalog:E8", "--json"]) == 0
    assert main(["construct", "cycle", "--n", "2"]) == 2
