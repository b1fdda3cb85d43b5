import json
import subprocess
import sys

import pytest

from semimod import __version__
from semimod.cli import main
from semimod.corpus import fixture_text


@pytest.fixture
def b31(tmp_path):
    p = tmp_path / "b31.json"
    p.write_text(fixture_text("b31.json"))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_exact(capsys, b31):
    code, rep = run(capsys, "check-exact", b31, "--seq", "ses")
    assert code == 0
    assert [p["exact"] for p in rep["result"]["positions"]] == [True, True, True]
    assert rep["result"]["short_exact"]["short_exact"]


def test_splittings(capsys, b31):
    code, rep = run(capsys, "splittings", b31, "--seq", "ses")
    assert code == 0
    assert rep["result"]["left_found"] and not rep["result"]["right_found"]
    assert rep["result"]["left"] == [0, 1, 1]


def test_projective_false_verdict_exits_zero(capsys, b31):
    code, rep = run(capsys, "projective", b31, "--P", "Z2", "--M", "B31", "--flavor", "k")
    assert code == 0
    res = rep["result"]
    assert res["verdict"] is False
    assert res["witness"]["pi"] == [0, 1, 0] and res["witness"]["g"] == [0, 1]


def test_envelope(capsys, b31):
    _, rep = run(capsys, "hom", b31, "--P", "Z2", "--M", "B31", "--seed", "7", "--budget", "1000")
    assert rep["version"] == __version__ and rep["format"] == 1
    assert rep["seed"] == 7 and rep["budgets"]["maps"] == 1000
    assert rep["result"]["count"] == 1


@pytest.mark.parametrize("argv, key, value", [
    (["kernel", "{m}", "--map", "pi"], "kernel", [0, 2]),
    (["closure", "--M", "B31", "--subset", "1"], "closure", [0, 1, 2]),
    (["quotient", "{m}", "--M", "B31", "--subset", "2"], "projection", [0, 1, 0]),
    (["pullback", "{m}", "--f", "pi", "--g", "pi"], "pairs", [[0, 0], [0, 2], [1, 1], [2, 0], [2, 2]]),
    (["validate", "{m}"], "canonical", True),
])
def test_simple_commands(capsys, b31, argv, key, value):
    code, rep = run(capsys, *[a.format(m=b31) for a in argv])
    assert code == 0 and rep["result"][key] == value


def test_pushouts(capsys, b31):
    code, rep = run(capsys, "pushout", b31, "--f", "iota", "--g", "iota")
    assert code == 0 and rep["result"]["universal"]["passed"]
    code, rep = run(capsys, "c-pushout", b31, "--f", "iota", "--g", "iota")
    assert code == 0 and rep["result"]["apex"]["size"] == 4


def test_laws_pass(capsys):
    code, rep = run(capsys, "laws", "--suite", "hom", "--samples", "5", "--seed", "3")
    assert code == 0 and rep["result"]["passed"] and rep["seed"] == 3


def test_laws_counterexample_exits_one(capsys, monkeypatch):
    from semimod import laws

    def broken(res, rng):
        laws._check(res, "always false", False, M=laws.BOOL)

    monkeypatch.setitem(laws.SUITES, "broken", (broken, "test"))
    code, rep = run(capsys, "laws", "--suite", "broken")
    assert code == 1
    ce = rep["result"]["suites"][0]["counterexample"]
    assert ce["statement"] == "always false" and ce["seed"] == 0


def test_corpus(capsys):
    code, rep = run(capsys, "corpus")
    assert code == 0 and rep["result"]["passed"]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["hom", "--P", "Z2"],
    ["laws", "--suite", "nope"],
    ["projective", "--P", "Z2", "--M", "B31", "--flavor", "strong"],
    ["closure", "--M", "B31", "--subset", "9"],
])
def test_usage_errors(capsys, argv):
    code, rep = run(capsys, *argv)
    assert code == 2 and rep["error"]["kind"] == "usage"


def test_validation_error(capsys, tmp_path):
    obj = json.loads(fixture_text("b31.json"))
    obj["morphisms"]["pi"]["map"] = [0, 1, 7]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    code, rep = run(capsys, "validate", str(p))
    assert code == 2
    assert rep["error"]["problems"][0]["pointer"] == "/morphisms/pi/map/2"


def test_out_flag(capsys, b31, tmp_path):
    out = tmp_path / "r.json"
    assert main(["hom", b31, "--P", "Z2", "--M", "B31", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["result"]["count"] == 1


def test_console_entry_point(b31):
    proc = subprocess.run([sys.executable, "-m", "semimod.cli", "splittings", b31, "--seq", "ses"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["right_found"] is False
