from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gkm.cli import main
from gkm.fixtures import CATALOG
from gkm.serialize import load_graph


@pytest.fixture
def fixtures(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.json"
        assert main(["fixture", name, "-o", str(path)]) == 0
        return str(path)
    return write


def run_json(capsys, argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_fixture_list(capsys):
    assert main(["fixture", "--list"]) == 0
    assert capsys.readouterr().out.split() == list(CATALOG)


def test_hilbert_table_shows_both_gradings(fixtures, capsys):
    path = fixtures("gras")
    capsys.readouterr()
    assert main(["hilbert", "--graph", path, "--max-degree", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["d", "2d", "dim"]
    assert [line.split() for line in lines[1:]] == [["0", "0", "1"], ["1", "2", "2"], ["2", "4", "4"], ["3", "6", "6"]]


def test_hilbert_json(fixtures, capsys):
    path = fixtures("u2-hp1")
    capsys.readouterr()
    code, out = run_json(capsys, ["hilbert", "--graph", path, "--max-degree", "4"])
    assert code == 0
    assert [r["dim"] for r in out["degrees"]] == [1, 1, 3, 3, 5]
    assert [r["cohomologicalDegree"] for r in out["degrees"]] == [0, 2, 4, 6, 8]


def test_hilbert_with_action(fixtures, capsys):
    graph, action = fixtures("sp2-flag"), fixtures("sp2-flag-action")
    capsys.readouterr()
    code, out = run_json(capsys, ["hilbert", "--graph", graph, "--action", action, "--max-degree", "3"])
    assert [r["dim"] for r in out["degrees"]] == [1, 2, 4, 6]
    assert out["invariant"] is True


def test_basis(fixtures, capsys):
    path = fixtures("sp22")
    capsys.readouterr()
    code, out = run_json(capsys, ["basis", "--graph", path, "--degree", "1"])
    assert code == 0 and out["components"] == ["A", "B"] and len(out["basis"]) == 2
    assert main(["basis", "--graph", path, "--degree", "1"]) == 0
    assert "dim = 2" in capsys.readouterr().out


@pytest.mark.parametrize("na, ab, act", [
    ("sp22", "sp2-flag", "sp2-flag-action"),
    ("u2-hp1", "hp1-torus", "hp1-torus-action"),
    ("g2-typecc", "g2-k6", "g2-k6-action"),
])
def test_oracle_agrees(fixtures, capsys, na, ab, act):
    args = ["oracle", "--nonabelian", fixtures(na), "--abelian", fixtures(ab), "--action", fixtures(act),
            "--max-degree", "4"]
    capsys.readouterr()
    code, out = run_json(capsys, args)
    assert code == 0 and out["agree"]


def test_oracle_mismatch_exit_code(fixtures, capsys):
    args = ["oracle", "--nonabelian", fixtures("u2-hp1"), "--abelian", fixtures("sp2-flag"),
            "--action", fixtures("sp2-flag-action"), "--max-degree", "2"]
    assert main(args) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_build_orbit(tmp_path, capsys):
    out = tmp_path / "b2.json"
    assert main(["build-orbit", "--family", "B", "--rank", "2", "--weight", "1,1", "-o", str(out)]) == 0
    g = load_graph(out).payload
    assert (len(g.dots), len(g.edges)) == (4, 6)
    assert main(["build-orbit", "--family", "G", "--rank", "2", "--weight", "0,1", "--json"]) == 0


def test_build_orbit_bad_input(capsys):
    assert main(["build-orbit", "--family", "B", "--rank", "2", "--weight", "1"]) == 2
    assert main(["build-orbit", "--family", "Q", "--rank", "2", "--weight", "1,1"]) == 2
    assert main(["build-orbit", "--family", "B", "--rank", "2", "--weight", "1/0,1"]) == 2


def test_export_dot(fixtures, tmp_path, capsys):
    out = tmp_path / "g.dot"
    assert main(["export-dot", "--graph", fixtures("sp22"), "-o", str(out)]) == 0
    assert out.read_text().startswith('digraph "sp22"')


def test_validate(fixtures, tmp_path, capsys):
    assert main(["validate", "--graph", fixtures("g2-typecc")]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "abelian", "schemaVersion": 1, "payload": {"torusRank": 0}}')
    capsys.readouterr()
    code, out = run_json(capsys, ["validate", "--graph", str(bad)])
    assert code == 1 and not out["valid"] and out["violations"]


def test_unknown_fixture_exit_code(capsys):
    assert main(["fixture", "nope"]) == 2
    assert "available:" in capsys.readouterr().err


def test_negative_degree_rejected(fixtures):
    assert main(["hilbert", "--graph", fixtures("gras"), "--max-degree", "-1"]) == 2


def test_group_cap_environment(fixtures, capsys, monkeypatch):
    graph, action = fixtures("g2-k6"), fixtures("g2-k6-action")
    monkeypatch.setenv("GKM_MAX_GROUP_ORDER", "2")
    assert main(["hilbert", "--graph", graph, "--action", action, "--max-degree", "1"]) == 2
    assert "exceeds 2" in capsys.readouterr().err


def test_console_module_runs():
    proc = subprocess.run([sys.executable, "-m", "gkm.cli", "fixture", "--list"],
                          capture_output=True, text=True, check=True)
    assert "sp22" in proc.stdout
