from __future__ import annotations

import json
import subprocess
import sys

from bethe_dvf.cli import main, parse_shape


def run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "bethe_dvf", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_shape_grammar():
    assert parse_shape("1^3").mu.parts == (1, 1, 1)
    assert parse_shape("2^2").mu.parts == (2, 2)
    assert parse_shape("3,2,1").mu.parts == (3, 2, 1)
    sd = parse_shape("3,1/1")
    assert sd.mu.parts == (3, 1) and sd.lam.parts == (1,)


def test_build_latex_golden_term_count():
    code, out, _ = run_cli("build", "B(2|1)", "--shape", "1^1",
                           "--format", "latex")
    assert code == 0
    assert len([line for line in out.strip().splitlines() if line]) == 7
    assert r"\phi(u-2)\phi(u+1)Q_{1}(u+1)" in out


def test_build_no_vacuum_count():
    code, out, _ = run_cli("build", "B(0|2)", "--shape", "2", "--no-vacuum")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert len(payload["terms"]) == 10
    assert all(not t["phi"] for t in payload["terms"])


def test_build_unsupported_shape_exit_2():
    code, _, err = run_cli("build", "D(2|1)", "--shape", "2,1")
    assert code == 2
    assert "error" in err


def test_malformed_spec_exit_2():
    code, _, _ = run_cli("count", "B(-1|0)", "--shape", "1")
    assert code == 2


def test_count_matches_library():
    code, out, _ = run_cli("count", "D(3|1)", "--shape", "1^2")
    assert code == 0
    assert json.loads(out)["count"] == 31


def test_solve_trivial_system():
    code, out, _ = run_cli("solve", "B(1|1)", "--N", "2", "--w", "0.5,-0.5",
                           "--Na", "0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["solutions"][0]["roots"] == [[], []]


def test_solve_fixture_residual():
    code, out, _ = run_cli("solve", "B(0|1)", "--N", "2", "--w", "2,-1",
                           "--Na", "1", "--seed", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["solutions"]
    assert all(s["residual"] < 1e-10 for s in payload["solutions"])


def test_solve_no_solution_exit_3():
    # the forced root collides with a zero of phi for this degenerate w
    code, _, err = run_cli("solve", "B(0|1)", "--N", "2", "--w", "1,-1",
                           "--Na", "1", "--starts", "8")
    assert code == 3


def test_verify_golden_deterministic():
    code1, out1, _ = run_cli("verify", "golden", "--seed", "42")
    code2, out2, _ = run_cli("verify", "golden", "--seed", "42")
    assert code1 == code2 == 0
    assert out1 == out2
    reports = json.loads(out1)
    assert len(reports) == 3
    assert all(r["passed"] for r in reports)
    assert all(r["seed"] == 42 for r in reports)


def test_verify_counts_suite():
    code, out, _ = run_cli("verify", "counts")
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)


def test_export_writes_expansions(tmp_path):
    code, out, _ = run_cli("export", "--out", str(tmp_path / "goldens"))
    assert code == 0
    files = sorted((tmp_path / "goldens").glob("*.json"))
    assert len(files) == 3
    payload = json.loads(files[0].read_text())
    assert payload["schema"] == 1 and payload["terms"]


def test_main_callable_directly():
    assert main(["count", "B(0|2)", "--shape", "1^4"]) == 0
