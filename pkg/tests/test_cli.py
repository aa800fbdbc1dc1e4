import json

import pytest

from congmon.cli import main
from congmon.exact_core import ExactMatrix, dumps_matrix
from congmon.lie_structure import An


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def a3(tmp_path):
    p = tmp_path / "a3.json"
    p.write_text(dumps_matrix(An(3)))
    return str(p)


def test_analyze_A3(capsys, a3):
    code, out, err = run(capsys, "analyze", "--input", a3)
    assert code == 0
    assert out["is_group"] is True and out["dim"] == 2
    assert "is_group=True" in err


def test_analyze_witness_verified(capsys, tmp_path):
    p = tmp_path / "e13.json"
    p.write_text(dumps_matrix(ExactMatrix.from_entries(3, 3, {(0, 2): 1})))
    code, out, _ = run(capsys, "analyze", "--input", str(p))
    assert code == 0 and out["is_group"] is False and out["verified"] is True


def test_star_degree_two(capsys):
    code, out, _ = run(capsys, "star", "--degree", "2")
    assert code == 0 and out["equal"] is True


def test_star_matrix_trials(capsys):
    code, out, _ = run(capsys, "star", "--degree", "3", "--matrix-trials", "3", "--seed", "1")
    assert out["matrix_equal"] is True


def test_an_power(capsys):
    code, out, _ = run(capsys, "an", "--n", "8", "--power", "2")
    M = out["matrix"]["entries"]
    assert all(M[i][j] == ("1" if j == i + 2 else "0") for i in range(8) for j in range(8))


def test_canonical_and_sigma(capsys):
    code, out, _ = run(capsys, "canonical", "--type", "b", "--size", "4", "--c", "2")
    assert code == 0 and out["block"] == "B_even"
    code, out, _ = run(capsys, "sigma", "--n", "6")
    assert out["verified"] is True


def test_tangent_and_brackets(capsys):
    code, out, _ = run(capsys, "tangent", "--family", "an2", "--n", "7")
    assert out["dim"] == 8 and out["matches_generic"] is True
    code, out, _ = run(capsys, "tangent", "--family", "an", "--n", "6", "--generic")
    assert out["dim"] == 3
    code, out, _ = run(capsys, "brackets", "--family", "an", "--n", "5")
    assert out["labels"] == ["h", "e1", "e2"] and out["verified"]


def test_group_sample_reproducible(capsys, tmp_path, monkeypatch):
    code, a, _ = run(capsys, "group-sample", "--family", "an2", "--n", "9", "--seed", "3")
    assert code == 0 and a["verified"] is True
    _, b, _ = run(capsys, "group-sample", "--family", "an2", "--n", "9", "--seed", "3")
    assert a == b
    monkeypatch.setenv("CONGMON_SEED", "3")
    _, c, _ = run(capsys, "group-sample", "--family", "an2", "--n", "9", "--seed", "99")
    assert c == a
    monkeypatch.delenv("CONGMON_SEED")
    p = tmp_path / "p.json"
    p.write_text(json.dumps(a["params"]))
    _, d, _ = run(capsys, "group-sample", "--params", str(p))
    assert d == a
    m = tmp_path / "m.json"
    m.write_text(json.dumps(a["matrix"]))
    code, f, _ = run(capsys, "factor", "--family", "an2", "--input", str(m))
    assert code == 0 and f["verified"]


def test_mod0_det(capsys):
    _, out, _ = run(capsys, "group-sample", "--family", "an2", "--n", "8", "--seed", "2")
    assert out["det"] == "1"


def test_stabilizer_and_orbit(capsys, tmp_path):
    y = tmp_path / "y.json"
    y.write_text(dumps_matrix(ExactMatrix.from_entries(6, 6, {(2, 0): 1})))
    code, out, _ = run(capsys, "stabilizer", "--family", "a6", "--input", str(y))
    assert code == 0 and out["classification"] == "rows-3-4" and out["nil_dim"] == 1
    x = tmp_path / "x.json"
    x.write_text(dumps_matrix(ExactMatrix.identity(8)))
    code, out, _ = run(capsys, "stabilizer", "--family", "a8sq", "--input", str(x))
    assert out["trivial"] is True
    code, out, _ = run(capsys, "orbit", "--family", "an2", "--input", str(x), "--count", "2")
    assert len(out["orbit"]) == 2


def test_exit_codes(capsys, tmp_path):
    assert main(["bogus"]) == 2
    assert main(["analyze", "--input", str(tmp_path / "missing.json")]) == 2
    assert main(["an", "--n", "3", "--power", "5"]) == 3
    x = tmp_path / "x.json"
    x.write_text(dumps_matrix(ExactMatrix.identity(8).scale(2)))
    assert main(["factor", "--family", "an2", "--input", str(x)]) == 3
    capsys.readouterr()


def test_selftest_subset(capsys):
    code, out, err = run(capsys, "selftest", "--criteria", "1,9")
    assert code == 0 and out["1"]["passed"] and out["9"]["passed"]
    assert "[PASS] criterion 1" in err


def test_output_file(capsys, tmp_path):
    o = tmp_path / "o.json"
    assert main(["star", "--degree", "2", "--output", str(o)]) == 0
    assert json.loads(o.read_text())["equal"] is True
