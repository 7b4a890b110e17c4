"""CLI integration tests: subcommand contracts and exit codes."""

import os
import subprocess
from pathlib import Path

import pytest

import qapround as qr

DATA = Path(os.environ.get("QAPROUND_DATA", "data/qaplib"))
CLI = os.environ.get("QAPROUND_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="QAPROUND_CLI not set")

TINY3 = "3\n0 1 2\n1 0 3\n2 3 0\n\n0 4 5\n4 0 6\n5 6 0\n"
ZERO2 = "2\n0 0\n0 0\n\n0 0\n0 0\n"


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def data_rows(stdout):
    return [line for line in stdout.splitlines() if not line.startswith("#")]


def test_round_r1_returns_the_combined_permutation(tmp_path):
    path = tmp_path / "tiny3.dat"
    path.write_text(TINY3)
    out = run("round", str(path), "--method", "x0", "--r", "1", "--seed", "7")
    assert out.returncode == 0
    rows = data_rows(out.stdout)
    assert rows[0] == "method,theta,objective,lap_solves,perm"
    # r = 1 makes X_C itself a permutation matrix; X0 must reproduce it.
    child = qr.derive_seed(7, "tiny3", 1)
    xc = qr.random_xc(3, qr.XcSpec.uniform(1), child)
    expected = qr.nearest_permutation(xc.value).perm
    perm_field = rows[1].split(",")[4]
    assert perm_field == "-".join(str(v) for v in expected.one_based())


def test_round_all_reports_x1_no_worse_than_x2():
    out = run("round", str(DATA / "nug20.dat"), "--method", "all", "--r", "2",
              "--seed", "1")
    assert out.returncode == 0
    rows = data_rows(out.stdout)
    assert len(rows) == 4
    by_method = {row.split(",")[0]: row.split(",") for row in rows[1:]}
    assert float(by_method["x1"][2]) <= float(by_method["x2"][2])
    assert by_method["x0"][1] == "0"


def test_profile_zero_instance_is_flat(tmp_path):
    path = tmp_path / "zero2.dat"
    path.write_text(ZERO2)
    out = run("profile", str(path), "--grid", "11")
    assert out.returncode == 0
    rows = data_rows(out.stdout)
    assert rows[0] == "theta,objective,perm"
    assert len(rows) == 12
    assert all(row.split(",")[1] == "0" for row in rows[1:])


def test_profile_staircase_and_marked_thetas():
    out = run("profile", str(DATA / "nug20.dat"), "--grid", "1000",
              "--mark-thetas", "--seed", "5")
    assert out.returncode == 0
    rows = data_rows(out.stdout)
    assert len(rows) == 1001
    objectives = [row.split(",")[1] for row in rows[1:]]
    duplicates = sum(1 for a, b in zip(objectives, objectives[1:]) if a == b)
    assert duplicates > len(objectives) // 2  # plateaus dominate
    assert len(set(objectives)) >= 2

    marks = [line for line in out.stdout.splitlines()
             if line.startswith("# theta1,") or line.startswith("# theta2,")]
    assert len(marks) == 2
    theta2_objective = marks[1].split(",")[2]

    round_out = run("round", str(DATA / "nug20.dat"), "--method", "x2",
                    "--seed", "5")
    x2_row = data_rows(round_out.stdout)[1].split(",")
    assert x2_row[2] == theta2_objective


def test_experiment_single_instance_csv(tmp_path):
    out_file = tmp_path / "table.csv"
    out = run("experiment", str(DATA / "nug12.dat"), "--runs", "2",
              "--out", str(out_file))
    assert out.returncode == 0
    lines = [line for line in out_file.read_text().splitlines()
             if not line.startswith("#")]
    assert len(lines) == 2
    assert lines[0].startswith("instance,n,r,runs,seed,")
    assert lines[1].startswith("nug12,12,2,2,")


def test_experiment_partial_failure_exits_3(tmp_path):
    missing = tmp_path / "nope.dat"
    out = run("experiment", str(DATA / "nug12.dat"), str(missing), "--runs", "1")
    assert out.returncode == 3
    assert "nope.dat" in out.stderr


def test_check_theorem_identity_instance(tmp_path):
    path = tmp_path / "id3.dat"
    path.write_text("3\n1 0 0\n0 1 0\n0 0 1\n\n1 0 0\n0 1 0\n0 0 1\n")
    out = run("check-theorem", str(path), "--trials", "3")
    assert out.returncode == 0
    assert "gamma_star=1\n" in out.stdout
    assert "result=PASS" in out.stdout


def test_parse_failure_exits_1(tmp_path):
    path = tmp_path / "bad.dat"
    path.write_text("2\n0 1\n2 0\n\n0 1\n1 0\n")  # asymmetric A
    out = run("check-theorem", str(path))
    assert out.returncode == 1
    assert "A[1,2]" in out.stderr


def test_invalid_flags_exit_2():
    out = run("round", str(DATA / "nug12.dat"), "--method", "bogus")
    assert out.returncode == 2
