"""Command-line surface: outputs, schemas, determinism, exit codes."""

import json

import pytest

from skeinhc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "+++", "+++")
    assert code == 0 and out.strip() == "24"
    code, out, _ = run(capsys, "dims", "+", "-", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"source": "+", "target": "-", "dimension": 0,
                               "enumerated": 0, "agrees": True}


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--N", "4", "--object", "A",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    weights = {tuple(r["weight"]) for r in payload["summands"]}
    assert weights == {(0, 0, 0, 0), (2, 0, -1, -1), (1, 1, 0, -2), (2, 2, -2, -2)}


def test_tableaux_and_paths(capsys):
    code, out, _ = run(capsys, "tableaux", "--mu", "2", "--lam", "2,1")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "tableaux", "--shape", "2,2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "paths", "--end-lam", "2,1", "--length", "3")
    assert code == 0 and out.strip() == "2"


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "--n", "2", "--word", "t1 t1")
    assert code == 0
    payload = json.loads(out)
    assert payload["variant"] == "even"
    coeffs = {tuple(t["w"]): t["coeff"] for t in payload["terms"]}
    assert coeffs[(1, 2)] == "1"


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "--n", "2", "--word", "t1", "--spec", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["trace"] == "(-2*q)/(q^2 - 1)"
    assert payload["spec"]["N"] == 2
    code, out, _ = run(capsys, "trace", "--n", "2", "--word", "t1",
                       "--format", "text")
    assert code == 0 and out.strip() == "(-2*q)/(q^2 - 1)"


def test_normalize_full_variant(capsys):
    code, out, _ = run(capsys, "normalize", "--n", "2", "--word", "v1")
    assert code == 0
    payload = json.loads(out)
    assert payload["variant"] == "full"
    assert payload["terms"] == [{"w": [1, 2], "s": "10", "coeff": "1"}]


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--source", "++", "--target", "++",
                       "--spec", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 4
    assert payload["ranks"] == {"5": 4}
    assert len(payload["entries"]) == 4


def test_determinism(capsys):
    args = ("gram", "--source", "++", "--target", "++", "--spec", "2")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    args = ("verify", "--suite", "dims", "--seed", "7")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "antisymmetrizer")
    assert code == 0
    assert "OK (0 failures)" in out
    assert all(line.startswith(("PASS", "OK")) for line in out.strip().splitlines())


def test_exit_codes(capsys):
    code, _, _ = run(capsys, "dims", "+?", "++")
    assert code == 2
    code, _, _ = run(capsys, "trace", "--n", "5", "--word", "t9")
    assert code == 2
    code, _, _ = run(capsys, "tableaux")
    assert code == 2
    assert main(["nosuchcommand"]) == 1
    assert main(["dims"]) == 1
