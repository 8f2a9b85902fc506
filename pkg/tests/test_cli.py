import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tautkit.cli import run
from tautkit.invariance import GraphSum, boundary_divisor_05


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call("--json", *argv)
    assert code == 0
    return json.loads(out)


def test_hurwitz_example():
    assert call("hurwitz", "--genus", "1", "--profile", "2") == (0, "1/2\n", "")
    rec = call_json("hurwitz", "--genus", "1", "--profile", "2")
    assert rec["value"] == "1/2" and rec["provenance"] == "bruteforce"
    assert rec["command"] == "hurwitz" and rec["inputs"]["profile"] == [2]


def test_hurwitz_variants():
    assert call("hurwitz", "--genus", "0", "--profile", "1,2", "--closed-form")[1] == "4\n"
    assert call("hurwitz", "--genus", "0", "--profile", "2", "--double", "1,1")[1] == "1\n"
    assert call("hurwitz", "--genus", "2", "--profile", "2", "--faber-hurwitz")[1] == "17\n"
    assert call("hurwitz", "--genus", "-1", "--profile", "1,1", "--disconnected")[1] == "1\n"


def test_psi_example():
    rec = call_json("psi", "--genus", "1", "--exps", "1")
    assert rec["value"] == "1/24" and rec["provenance"] == "kdv"
    assert call("psi", "--genus", "0", "--exps", "0,0,0")[1] == "1\n"


def test_graphs_example():
    assert call("graphs", "--genus", "0", "--legs", "4", "--dim", "0", "--count")[1] == "3\n"
    code, out, _ = call("graphs", "--genus", "0", "--legs", "4")
    assert code == 0 and len(out.splitlines()) == 4


def test_graphs_dot(tmp_path):
    path = tmp_path / "g.dot"
    assert call("graphs", "--genus", "1", "--legs", "1", "--dot", str(path))[0] == 0
    text = path.read_text()
    assert text.count("graph G") == 2 and 'label="g=1"' in text


def test_hodge_and_elsv():
    rec = call_json("hodge", "--genus", "1", "--points", "1")
    assert {"a": [0], "k": 1, "value": "1/24"} in rec["value"]
    code, out, _ = call("elsv", "--genus", "1", "--profile", "2")
    assert code == 0 and out.splitlines() == ["elsv 1/2", "bruteforce 1/2", "agree"]
    rec = call_json("elsv", "--genus", "2", "--profile", "2,1,1")
    assert rec["value"]["agree"] is True


def test_faber():
    rec = call_json("faber", "--genus", "4", "--d", "1,1")
    assert rec["value"]["lhs_coeff"] == "35/3"
    rec = call_json("faber", "--genus", "4", "--solve")
    assert rec["value"]["k1^2"] == "32/3"
    assert call("faber", "--genus", "4")[0] == 2


def test_euler():
    assert call("euler", "--genus", "1", "--legs", "1")[1] == "-1/12\n"
    assert call("euler", "--genus", "2")[1] == "-1/240\n"


def test_rl_fixture_and_input(tmp_path):
    assert call("rl", "--l", "1", "--fixture", "m05", "--points")[1] == "0\n"
    path = tmp_path / "s.json"
    path.write_text(GraphSum.single(boundary_divisor_05((1, 2))).to_json())
    code, out, _ = call("rl", "--l", "1", "--input", str(path))
    assert code == 0
    terms = [json.loads(line) for line in out.splitlines()]
    assert terms and all(Fraction(t["coeff"]) != 0 for t in terms)


def test_rationals_round_trip():
    for argv in [("psi", "--genus", "2", "--exps", "4"), ("euler", "--genus", "3"),
                 ("hurwitz", "--genus", "0", "--profile", "3,1")]:
        rec = call_json(*argv)
        v = Fraction(rec["value"])
        assert str(v) == rec["value"]


def test_deterministic_output():
    argv = ("--json", "graphs", "--genus", "1", "--legs", "2")
    assert call(*argv) == call(*argv)


def test_exit_codes(capsys):
    assert call("bogus")[0] == 2
    assert call("hurwitz", "--genus", "0", "--profile", "0,1")[0] == 2
    code, _, err = call("hurwitz", "--genus", "0", "--profile", "8")
    assert code == 3 and "max_degree" in err
    assert call("graphs", "--genus", "3", "--legs", "3")[0] == 3
    assert call("hurwitz", "--genus", "0", "--profile", "4", "--max-degree", "3")[0] == 3
    assert call("psi", "--genus", "0", "--exps", "0")[0] == 2
    capsys.readouterr()


def test_cache_env(tmp_path, monkeypatch):
    path = tmp_path / "cache.txt"
    monkeypatch.setenv("TAUTKIT_CACHE", str(path))
    assert call("psi", "--genus", "2", "--exps", "2,3")[1] == "29/5760\n"
    assert "2;2,3;29/5760" in path.read_text().splitlines()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tautkit", "euler", "--genus", "1", "--legs", "1"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "-1/12\n"
