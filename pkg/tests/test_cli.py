"""CLI subcommand round trips."""

import json

import pytest

from toricgraph.cli import main


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.json"
    path.write_text(json.dumps({"vertices": [1, 2, 3, 4], "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}))
    return str(path)


def test_walks_command(c4_file, capsys):
    assert main(["walks", c4_file]) == 0
    out = capsys.readouterr().out
    assert "1 primitive even closed walks" in out
    assert " - " in out


def test_ideal_command(c4_file, capsys):
    assert main(["ideal", c4_file, "--order", "lex"]) == 0
    out = capsys.readouterr().out
    assert "minimal generators (1)" in out and "initial ideal (1)" in out


def test_betti_command_with_json(c4_file, tmp_path, capsys):
    out_path = tmp_path / "table.json"
    assert main(["betti", c4_file, "--json", str(out_path)]) == 0
    data = json.loads(out_path.read_text())
    assert data["totals"] == [1, 1]
    assert data["cm"] is True and data["gorenstein"] is True
    assert data["graded"]["1,2"] == 1
    assert data["multigraded"]["1"] == [{"s": [1, 1, 1, 1], "beta": 1}]


def test_betti_exact_field(c4_file, capsys):
    assert main(["betti", c4_file, "--field", "exact"]) == 0
    assert "CM True" in capsys.readouterr().out


def test_koszul_command(c4_file, capsys):
    assert main(["koszul", c4_file, "1,1,1,1"]) == 0
    assert "[0, 1]" in capsys.readouterr().out


def test_example_command(capsys):
    assert main(["example", "ex-2.9"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_check_command(tmp_path, capsys):
    graph_path = tmp_path / "g.json"
    assert main(["fixture", "ex-2.9", "--out", str(graph_path)]) == 0
    capsys.readouterr()
    assert main(["check", "thm-2.5", str(graph_path), "--path", "1,9,10"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["conclusion_ok"] is True


def test_check_hypothesis_failure_exit_code(tmp_path, capsys):
    graph_path = tmp_path / "g.json"
    main(["fixture", "ex-2.9", "--out", str(graph_path)])
    capsys.readouterr()
    assert main(["check", "thm-2.5", str(graph_path), "--path", "9,1,2"]) == 2


def test_search_command(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"target": "lemma-2.3", "family": {"max_edges": 10}}))
    out = tmp_path / "reports.jsonl"
    code = main(["search", str(spec), "--seed", "3", "--budget", "4", "--out", str(out)])
    assert code == 0
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert len(lines) == 4
    assert all(l["check"] == "lemma-2.3" for l in lines)
    assert all(l["seed"] == 3 for l in lines)


def test_tn_command(capsys):
    assert main(["tn", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "codim 2" in out and "Krull dim 7" in out
    assert main(["tn", "--n", "1", "--connect", "2"]) == 0


def test_fixture_roundtrip(tmp_path, capsys):
    path = tmp_path / "fig10.json"
    assert main(["fixture", "fig-10", "--out", str(path)]) == 0
    data = json.loads(path.read_text())
    assert len(data["edges"]) == 14
