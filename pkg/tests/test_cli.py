"""Command-line round trips, output stability, and exit codes."""

import json
import subprocess
import sys

import pytest

import quandles.quandle as Q
from quandles import cli
from quandles.theorems import TheoremReport


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_make_round_trip(tmp_path, capsys):
    path = tmp_path / "r5.qnd"
    code, out, err = run(["make", "dihedral", "5", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert Q.load_quandle(path).table.tolist() == Q.dihedral(5).table.tolist()


def test_make_to_stdout(capsys):
    code, out, _ = run(["make", "dihedral", "3"], capsys)
    assert code == 0
    assert out == "3\n0 2 1\n2 1 0\n1 0 2\n"


def test_make_alexander(tmp_path, capsys):
    path = tmp_path / "a9.qnd"
    code, _, _ = run(["make", "alexander", "--factors", "3,3", "--scalar", "2",
                      "--out", str(path)], capsys)
    assert code == 0
    assert Q.load_quandle(path).order == 9


def test_make_conj(capsys):
    code, out, _ = run(["make", "conj", "--group", "s3"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "6"


def test_make_galexander_matrix(tmp_path, capsys):
    path = tmp_path / "m.qnd"
    code, _, _ = run(["make", "galexander", "--factors", "3,3",
                      "--matrix", "0,1,1,1", "--out", str(path)], capsys)
    assert code == 0
    assert Q.load_quandle(path).order == 9


def test_make_rejects_non_unit_scalar(capsys):
    code, _, err = run(["make", "alexander", "--factors", "4", "--scalar", "2"], capsys)
    assert code == 2
    assert "error" in err


def test_make_requires_exactly_one_phi_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["make", "alexander", "--factors", "5", "--scalar", "2", "--images", "0,1,2,3,4"])
    assert exc.value.code == 2
    assert "not allowed with" in capsys.readouterr().err


def test_analyze_text_is_stable(tmp_path, capsys):
    path = tmp_path / "r3.qnd"
    Q.save_quandle(Q.dihedral(3), path)
    code, first, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    assert first == (
        "order: 3\n"
        "inner order: 6\n"
        "automorphism order: 6\n"
        "connected: yes\n"
        "two-point homogeneous: yes\n"
        "automorphisms doubly transitive: yes\n"
        "commutative: yes\n"
        "involutory: yes\n"
    )
    code, second, _ = run(["analyze", str(path)], capsys)
    assert second == first


def test_analyze_json(tmp_path, capsys):
    path = tmp_path / "r4.qnd"
    Q.save_quandle(Q.dihedral(4), path)
    code, out, _ = run(["analyze", str(path), "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["order"] == 4
    assert doc["connected"] is False


def test_analyze_generators(tmp_path, capsys):
    path = tmp_path / "r3.qnd"
    Q.save_quandle(Q.dihedral(3), path)
    code, out, _ = run(["analyze", str(path), "--generators"], capsys)
    assert code == 0
    assert "inner generators:" in out
    assert "(1 2)" in out


def test_analyze_order_one_prints_na(tmp_path, capsys):
    path = tmp_path / "one.qnd"
    Q.save_quandle(Q.trivial_quandle(1), path)
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    assert "two-point homogeneous: n/a" in out


def test_analyze_invalid_table(tmp_path, capsys):
    path = tmp_path / "bad.qnd"
    path.write_text("2\n1 0\n0 1\n")
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 2
    assert "not a quandle" in err


def test_analyze_missing_file(capsys):
    code, _, err = run(["analyze", "does-not-exist.qnd"], capsys)
    assert code == 2
    assert "error" in err


def test_verify_single(capsys):
    code, out, _ = run(["verify", "dihedral-corollary", "--n", "3,5"], capsys)
    assert code == 0
    assert "pass" in out
    assert "all passed" in out


def test_verify_unknown_id(capsys):
    code, _, err = run(["verify", "nope"], capsys)
    assert code == 2
    assert "unknown theorem id" in err


def test_verify_json_and_out(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run(["verify", "mccarron", "--max-order", "4", "--json",
                        "--out", str(report)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["passed"] is True
    assert json.loads(report.read_text()) == doc
    assert doc["reports"][0]["annotations"]["classes[4]"] == 7


def test_verify_failure_exit_code(monkeypatch, capsys):
    broken = TheoremReport("demo")
    broken.fail("witness here")
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [broken])
    code, out, _ = run(["verify", "all"], capsys)
    assert code == 1
    assert "FAIL demo: witness here" in out


def test_list_subcommand(capsys):
    code, out, _ = run(["list"], capsys)
    assert code == 0
    assert "mccarron" in out and "bae-choe" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quandles.cli", "make", "dihedral", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("3\n")
