import json

import pytest

from mulpersist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_solve_single_equation(capsys):
    code, out = run(capsys, "solve", "--eq", "1.01")
    assert code == 0
    assert "f(x)=1" in out


def test_solve_unknown_id(capsys):
    assert main(["solve", "--eq", "0.00"]) == 2
    assert main(["solve"]) == 2
    assert main(["solve", "--target", "4"]) == 2


def test_solve_target_9_json(capsys):
    code, out = run(capsys, "solve", "--target", "9", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["sets"]) == 2
    by_id = {s["equation_id"]: s["records"] for s in payload["sets"]}
    assert by_id["9.01"] == []
    assert len(by_id["9.02"]) == 2


def test_solve_threads_agree(capsys):
    _, serial = run(capsys, "solve", "--target", "9", "--format", "json",
                    "--threads", "1")
    _, pooled = run(capsys, "solve", "--target", "9", "--format", "json",
                    "--threads", "2")
    assert serial == pooled


def test_prove_single_vertex(capsys):
    code, out = run(capsys, "prove", "--target", "3")
    assert code == 0
    assert "height bound 1" in out
    assert main(["prove", "--target", "2"]) == 2


def test_scan(capsys, tmp_path):
    out_path = tmp_path / "scan.json"
    code, _ = run(capsys, "scan", "--limit", "10000", "--format", "json",
                  "--out", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["max_height"] == 6
    assert payload["witness"] == 6788
    assert payload["violations"] == []


def test_scan_guard(capsys):
    assert main(["scan", "--limit", "0"]) == 3


def test_two_bound(capsys):
    code, out = run(capsys, "two-bound", "--multiset", "4,4,7")
    assert code == 0
    assert "2^7" in out and "111744" in out
    assert main(["two-bound", "--multiset", "4,x"]) == 2
    assert main(["two-bound", "--multiset", "4,4,7", "--bound", "3"]) == 3


def test_even_stats(capsys):
    code, out = run(capsys, "even-stats", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["equations"] for r in rows] == [1117, 1062, 6377, 4774]


def test_selftest(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert "constants: 47 checks ok" in out
    assert "sampled lookups ok" in out


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "even-stats", "--format", "json", "--seed", "1")
    _, second = run(capsys, "even-stats", "--format", "json", "--seed", "1")
    assert first == second
