from __future__ import annotations

import json

import pytest

from greenseq.cli import main
from greenseq.quivercore import cyclic_a3, kronecker, linear_a


@pytest.fixture
def files(tmp_path):
    (tmp_path / "a2.json").write_text(linear_a(2).to_json())
    (tmp_path / "kr.json").write_text(kronecker().to_json())
    (tmp_path / "l1.json").write_text(cyclic_a3(1).to_json())
    (tmp_path / "seq.json").write_text(json.dumps(["S1", "1>2", "S2"]))
    (tmp_path / "short.json").write_text(json.dumps({"sequence": ["S1", "S2"]}))
    (tmp_path / "x.json").write_text(json.dumps({"dims": [1, 1], "arrows": {"1->2": [["0"]]}}))
    (tmp_path / "p.json").write_text(json.dumps({"breakpoints": [[0, -1, -2], [1, 2, 1]], "extend": "linear"}))
    return tmp_path


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_mgs(files, capsys):
    code, out = _run(capsys, "mgs", "enumerate", "--quiver", files / "a2.json")
    data = json.loads(out)
    assert code == 0 and len(data["mgs"]) == 2 and data["complete_up_to_cap"]


def test_walls_render(files, capsys):
    code, _ = _run(capsys, "walls", "render", "--quiver", files / "l1.json", "--out", files / "l1.svg")
    assert code == 0 and (files / "l1.svg").read_text().startswith("<?xml")


def test_path_crossings(files, capsys):
    code, out = _run(capsys, "path", "crossings", "--quiver", files / "a2.json", "--path", files / "p.json")
    data = json.loads(out)
    assert code == 0 and [c["dim"] for c in data["crossings"]] == [[1, 0], [1, 1], [0, 1]]


def test_hn_commands(files, capsys):
    code, out = _run(capsys, "hn", "filter", "--quiver", files / "a2.json", "--system", files / "seq.json",
                     "--module", files / "x.json")
    assert code == 0 and json.loads(out)["factor_labels"] == [[1, 1], [3, 1]]
    code, out = _run(capsys, "hn", "maximal", "--quiver", files / "a2.json", "--sequence", files / "short.json")
    data = json.loads(out)
    assert not data["maximal"] and data["extendable"] == {"position": 1, "module": "1>2"}


def test_linearity(files, capsys):
    code, out = _run(capsys, "linearity", "check", "--quiver", files / "a2.json", "--sequence", files / "seq.json")
    assert json.loads(out)["status"] == "Linear"
    code, out = _run(capsys, "linearity", "check", "--quiver", files / "a2.json", "--sequence",
                     files / "short.json", "--b", "1,1")
    assert json.loads(out)["counterexample"] == "1>2"


def test_verify(files, capsys):
    code, out = _run(capsys, "verify", "--quiver", files / "kr.json", "--report", files / "r.json")
    assert code == 0 and out.strip().endswith("PASS")
    assert json.loads((files / "r.json").read_text())["passed"]
