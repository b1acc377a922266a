import json

import pytest
from click.testing import CliRunner

from coxric.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args))


def test_group_table(runner):
    res = invoke(runner, "group", "A3")
    assert res.exit_code == 0
    assert "order:            24" in res.output
    assert "length histogram: 1 3 5 6 5 3 1" in res.output


def test_group_json_envelope(runner):
    res = invoke(runner, "group", "A3", "--json")
    doc = json.loads(res.output)
    assert doc["config"]["command"] == "group"
    assert doc["config"]["target"] == "A3"
    assert doc["report"]["order"] == 24


def test_group_csv(runner):
    res = invoke(runner, "group", "A2", "--format", "csv")
    lines = res.output.splitlines()
    assert lines[0] == "length,count"
    assert lines[1:] == ["0,1", "1,2", "2,2", "3,1"]


def test_group_from_matrix_file(runner, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"m": [[1, 5], [5, 1]]}))
    res = invoke(runner, "group", "--matrix", str(path))
    assert res.exit_code == 0
    assert "order:            10" in res.output


def test_ricci_verdict_and_exit(runner):
    res = invoke(runner, "ricci", "B3")
    assert res.exit_code == 0
    assert "ricci:      2" in res.output
    assert "verdict:    Ric = 2 PASS" in res.output


def test_ricci_identity_vertex_alias(runner):
    res = invoke(runner, "ricci", "A2", "--vertex", "e")
    assert res.exit_code == 0
    assert "argmin:     0" in res.output
    assert "ricci:      2" in res.output


def test_ricci_on_graph_file(runner, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("\n".join(f"{i} {(i + 1) % 5}" for i in range(5)))
    res = invoke(runner, "ricci", "--graph", str(path))
    assert res.exit_code == 0
    assert "ricci:      0" in res.output


def test_ricci_size_guard_exit_code(runner):
    res = invoke(runner, "ricci", "B4xA2")
    assert res.exit_code == 2


def test_spectral_table(runner):
    res = invoke(runner, "spectral", "A2")
    assert res.exit_code == 0
    assert "spectral gap:      3" in res.output
    assert "verdict:           lambda >= 2 PASS" in res.output


def test_iso_exhaustive_pass(runner):
    res = invoke(runner, "iso", "A2", "--exhaustive")
    assert res.exit_code == 0
    assert "failures:  0" in res.output


def test_iso_failure_exit_code(runner, tmp_path):
    # the 10-path violates the curvature-free corollary bound
    path = tmp_path / "p10.txt"
    path.write_text("\n".join(f"{i} {i + 1}" for i in range(9)))
    res = invoke(runner, "iso", "--graph", str(path), "--exhaustive")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_classes_table(runner):
    res = invoke(runner, "classes", "A3")
    assert res.exit_code == 0
    assert "classes:" in res.output
    assert "representative" in res.output


def test_check_verdict_lines(runner):
    res = invoke(runner, "check", "A2", "--seed", "1")
    assert res.exit_code == 0
    assert "  PASS ricci_identity" in res.output
    assert res.output.rstrip().endswith("result: PASS")


def test_check_json_deterministic(runner):
    args = ("check", "A3", "--seed", "7", "--json")
    a = invoke(runner, *args)
    b = invoke(runner, *args)
    assert a.output == b.output
    doc = json.loads(a.output)
    assert doc["report"]["passed"] is True


def test_export_dot(runner):
    res = invoke(runner, "export", "A2", "--what", "dot")
    assert res.exit_code == 0
    assert res.output.startswith("graph G {")


def test_export_edges_to_file(runner, tmp_path):
    out = tmp_path / "edges.txt"
    res = invoke(runner, "export", "A1xA1", "--what", "edges",
                 "--out", str(out))
    assert res.exit_code == 0
    assert out.read_text().splitlines() == ["0 1", "0 2", "1 3", "2 3"]


def test_export_group_json(runner):
    res = invoke(runner, "export", "A1", "--what", "group")
    doc = json.loads(res.output)
    assert doc["order"] == 2


def test_bad_spec_exits_two(runner):
    res = invoke(runner, "group", "Z9")
    assert res.exit_code == 2


def test_dot_format_rejected_outside_export(runner):
    res = invoke(runner, "group", "A2", "--format", "dot")
    assert res.exit_code == 2


def test_spec_and_matrix_conflict(runner, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"m": [[1, 3], [3, 1]]}))
    res = invoke(runner, "group", "A2", "--matrix", str(path))
    assert res.exit_code == 2


def test_missing_target(runner):
    res = invoke(runner, "ricci")
    assert res.exit_code == 2
