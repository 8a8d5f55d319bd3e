import json
from pathlib import Path

import pytest

from petersonring.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_present_peterson_a2(capsys):
    code, out = run(capsys, "present", "--type", "A", "--rank", "2", "--I", "1,2", "--J", "")
    assert code == 0
    assert "betti: 1,2,1" in out


def test_present_includes_alpha1(capsys):
    code, rep = run_json(capsys, "present", "--type", "A", "--rank", "3", "--I", "1,2,3", "--J", "1")
    assert code == 0 and "a1" in rep["ordinary_generators"]


def test_present_point(capsys):
    code, rep = run_json(capsys, "present", "--type", "A", "--rank", "1", "--I", "1", "--J", "1")
    assert code == 0 and rep["ordinary_series"] == [1]


def test_gkm_a2(capsys):
    code, rep = run_json(capsys, "gkm", "--type", "A", "--rank", "2")
    assert code == 0
    assert rep["relations"]["fixed_points"] == ["{}", "{1}", "{2}", "{1,2}"]


def test_gkm_g2_quadratic(capsys):
    code, rep = run_json(capsys, "gkm", "--type", "G", "--rank", "2", "--max-degree", "6")
    assert code == 0 and rep["relations"]["quadratic_checked"]


def test_gkm_point(capsys):
    code, rep = run_json(capsys, "gkm", "--type", "B", "--rank", "3", "--I", "2", "--J", "2")
    assert code == 0 and len(rep["relations"]["fixed_points"]) == 1


def test_cells_paving(capsys):
    code, rep = run_json(capsys, "cells", "--n", "4", "--a", "1", "--b", "1")
    assert code == 0 and rep["paving"] == [1, 0, 2, 0, 1]


def test_cells_example_text(capsys):
    code, out = run(capsys, "cells", "--example", "nonirreducible")
    assert code == 0
    assert "components: 2" in out and "factors: y_3, -y_3^2 + 2*y_2" in out


@pytest.mark.parametrize("argv,golden", [
    (["present", "--type", "A", "--rank", "2"], "a2_peterson.json"),
    (["cells", "--n", "9", "--K", "1,2,5,6,7"], "n9_cell.json"),
    (["cells", "--example", "nonirreducible"], "n4_nonirreducible.json"),
])
def test_golden(capsys, argv, golden):
    code, rep = run_json(capsys, *argv)
    assert code == 0
    assert rep == json.loads((GOLDEN / golden).read_text())


def test_json_roundtrip(capsys):
    code, out = run(capsys, "gkm", "--type", "A", "--rank", "3", "--J", "2", "--format", "json")
    rep = json.loads(out)
    assert json.dumps(rep, indent=2, sort_keys=True) == out.strip()


def test_guard_exit_code(capsys):
    code = main(["present", "--type", "A", "--rank", "3", "--spair-budget", "1"])
    assert code == 2
    assert "resource guard" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["present", "--type", "A", "--rank", "2", "--J", "3"],
    ["present", "--type", "E", "--rank", "5"],
    ["cells", "--n", "4", "--a", "3", "--b", "1"],
    ["cells"],
])
def test_invalid_input_is_usage_error(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_failure_exit_code(capsys, monkeypatch):
    from petersonring import cli
    monkeypatch.setattr(cli.typea, "expected_paving", lambda n, b: [1])
    code, _ = run(capsys, "cells", "--n", "4", "--a", "1", "--b", "1")
    assert code == 1


def test_present_writes_figure(capsys, tmp_path):
    code, _ = run(capsys, "present", "--type", "B", "--rank", "2", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "betti.png").stat().st_size > 0
    assert (tmp_path / "betti.csv").read_text().splitlines()[0] == "degree,betti"


def test_suite_small(capsys, tmp_path):
    code, out = run(capsys, "suite", "--max-rank", "2", "--jobs", "2", "--out", str(tmp_path))
    assert code == 0
    rows = [line for line in out.splitlines() if line and not line.startswith("#")]
    assert rows[0] == "check,passed,cases"
    assert all(",PASS," in r for r in rows[1:]) and len(rows) == 10
    assert (tmp_path / "summary.csv").exists() and (tmp_path / "betti.png").exists()
