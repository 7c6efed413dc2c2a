import json

import pytest

from padic_thue.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,code", [
    (["p31", "validate", "1", "2", "13"], 0),
    (["p31", "validate", "1", "2", "3"], 1),
    (["p31", "validate", "1", "2"], 2),
    (["p31", "family", "claim1", "--a", "3"], 0),
    (["p31", "family", "claim2", "--a", "1", "--b", "1"], 2),
    (["p31", "extend", "1", "2", "13", "--bound", "100"], 0),
    (["solve-thue", "--norm", "+1"], 0),
    (["solve-thue", "--norm", "-1"], 0),
    (["solve-thue", "--norm", "2"], 2),
    (["solve-thue", "--precision", "1"], 2),
    (["solve-thue", "--prime", "7"], 2),
    (["tricube", "--bound", "0"], 2),
    (["padic", "hensel", "--poly", "-1,3,3,1", "--prime", "31", "--prec", "2", "--root", "3"], 0),
    (["padic", "hensel", "--poly", "-1,3,3,1", "--prime", "31", "--prec", "2", "--root", "4"], 2),
    (["padic", "strassman", "--valuations", "inf,1,2,3", "--tail", "linear"], 0),
    (["padic", "strassman", "--valuations", "6,6", "--tail", "linear", "--precision", "6"], 1),
    # (X - 1)^2 (X + 1): 1 is a root mod 31 but not simple, so the lift fails
    (["padic", "hensel", "--poly", "1,-1,-1,1", "--prime", "31", "--root", "1"], 1),
    (["no-such-command"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_hensel_output(capsys):
    code, out, _ = run(capsys, "padic", "hensel", "--poly", "-1,3,3,1", "--prime", "31",
                       "--prec", "2", "--root", "3", "--format", "json")
    assert code == 0
    assert "282" in out


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--format", "json", "--bound", "1000")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "padic-thue/1"
    disc = [c for c in doc["checks"] if c["name"] == "discriminant"]
    assert disc and disc[0]["value"] == -108
    assert all(d["status"] == "corrected" for d in doc["divergences_from_paper"])


def test_tricube_prints_one(capsys):
    code, out, _ = run(capsys, "tricube", "--bound", "1000000")
    assert code == 0
    assert out == "1\n"


def test_validate_text(capsys):
    code, out, _ = run(capsys, "p31", "validate", "1", "2", "13")
    assert code == 0 and "valid P31-set" in out


def test_json_determinism(capsys):
    outs = [run(capsys, "solve-thue", "--norm", "+1", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["positive_solutions"] == [[1, 1]]


def test_out_path(capsys, tmp_path):
    target = tmp_path / "cert.json"
    code, out, _ = run(capsys, "solve-thue", "--norm", "-1", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["norm"] == -1
