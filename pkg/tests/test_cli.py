"""File formats and the command-line interface."""

import json
import subprocess
import sys

import pytest

from lpa import cli
from lpa import io as lio
from lpa.classify import Decision
from lpa.cli import corpus_dir, main
from lpa.errors import ParseError
from lpa.field import FieldCtx
from lpa.graph import Graph
from lpa.leavitt import eq
from lpa.rep import Rep

C = corpus_dir()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, json.loads(capsys.readouterr().out)


def test_rep_roundtrip(tmp_path):
    r = Rep.build(Graph.circle(2), FieldCtx.Q(), {"v1": 1, "v2": 2},
                  {"e1": [["1/2"], [3]], "e2": [[1, -1]]})
    path = tmp_path / "r.json"
    lio.dump_json(r.to_json(), path)
    assert lio.load_rep(path) == r


def test_element_and_operator_roundtrip():
    rep = lio.load_rep(C / "caret_rep.json")
    w = lio.parse_element(lio.load_json(C / "caret_element.json"), rep)
    assert eq(lio.parse_element(w.to_json(), rep), w)
    ops = lio.parse_operator(lio.load_json(C / "op_e1star.json"), rep)
    assert lio.parse_operator(lio.operator_to_json(ops, rep.field), rep) == ops


def test_parse_error_has_location(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "field": "Q",\n  oops\n}\n')
    with pytest.raises(ParseError, match=r"bad.json:3:"):
        lio.load_json(bad)


def test_malformed_rep():
    with pytest.raises(ParseError):
        lio.parse_rep({"graph": {"vertices": ["v"], "edges": []}})
    with pytest.raises(ParseError):
        lio.parse_field({"kind": "Fp"})


def test_analyze(capsys):
    code, out = run(capsys, "analyze", C / "full_degenerate.json", "--seed", 1)
    assert code == 0
    res = out["results"]
    assert res["full"] and not res["nondegenerate"]
    assert res["a_dimension"] == {"v": 1}


def test_seed_required(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", str(C / "full_degenerate.json")])
    assert info.value.code == 2


def test_bad_input_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, out = run(capsys, "analyze", bad, "--seed", 0)
    assert code == 2 and "ParseError" in out["status"]
    code, _ = run(capsys, "sigma", tmp_path / "missing.json")
    assert code == 2


def test_sigma_and_recover(capsys, tmp_path):
    code, out = run(capsys, "sigma", C / "nondegenerate_not_full.json")
    assert code == 0 and out["results"]["after"] == {"v": 1}
    target = tmp_path / "rec.json"
    code, out = run(capsys, "recover", C / "nondegenerate_not_full.json", "-o", target)
    assert code == 0 and lio.load_rep(target).total_dim == 1


def test_nabla_of_remark_is_zero(capsys):
    code, out = run(capsys, "nabla", C / "degenerate_remark.json")
    assert code == 0 and out["results"]["after"] == {"v": 0}


def test_iso_and_irr(capsys):
    code, out = run(capsys, "iso", C / "caret_rep.json", C / "caret_rep.json", "--seed", 0)
    assert code == 0 and out["results"]["answer"] == "Yes"
    code, out = run(capsys, "irr", C / "degenerate_remark.json", "--seed", 0)
    assert out["results"]["answer"] == "No"


def test_undecided_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.classify, "is_isomorphic",
                        lambda *a, **k: Decision("Unknown", reason="forced"))
    args = ["iso", C / "caret_rep.json", C / "caret_rep.json", "--seed", 0]
    assert run(capsys, *args)[0] == 0
    assert run(capsys, *args, "--require-decision")[0] == 4


def test_pi_act_figure(capsys):
    code, out = run(capsys, "pi-act", "--rep", C / "caret_rep.json",
                    "--element", C / "caret_element.json", "--operator", C / "op_e1e2.json")
    assert code == 0
    assert out["results"]["result"]["terms"] == [
        {"path": {"origin": "v", "edges": []}, "vector": ["0", "1"]}]


def test_chen_and_moduli(capsys):
    code, out = run(capsys, "chen", "cyclic", "--graph", "bouquet:2", "--cycle", "e1,e2",
                    "--lambda", "3", "--field", "F5")
    assert code == 0
    code, out = run(capsys, "chen", "graded", "--graph", "bouquet:2", "--cycle", "e1",
                    "--vertex", "v", "--depth", "4")
    assert code == 0 and out["results"]["chain"]["length"] == 4
    code, out = run(capsys, "moduli", "count", "--graph", "bouquet:2", "--dims", "1", "--field", "F3")
    assert code == 0 and out["results"]["nonzero_classes"] == 8
    code, out = run(capsys, "chen", "cyclic", "--graph", "bouquet:2", "--cycle", "e1,e1")
    assert code == 2 and "NotPrime" in out["status"]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--rep", C / "caret_rep.json", "--samples", 30, "--seed", 1)
    assert code == 0 and out["results"]["ok"]


def test_repro(capsys):
    code, out = run(capsys, "repro")
    assert code == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lpa.cli", "repro"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "ok"
