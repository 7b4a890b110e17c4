"""Smoke tests for the qapround python module."""

import os
import subprocess
from pathlib import Path

import numpy as np
import pytest

import qapround as qr

DATA = Path(os.environ.get("QAPROUND_DATA", "data/qaplib"))


@pytest.fixture(scope="module")
def nug12():
    return qr.load_instance(DATA / "nug12.dat")


def test_objective_matches_certified_optimum(nug12):
    sln = qr.load_solution(DATA / "nug12.sln")
    assert sln.value == 578
    assert qr.objective(nug12, sln.perm) == pytest.approx(578)


def test_instance_roundtrip_numpy(nug12):
    a = np.asarray(nug12.A)
    assert a.shape == (12, 12)
    assert np.allclose(a, a.T)
    inst = qr.Instance("copy", a, np.asarray(nug12.B))
    assert inst.n == 12


def test_random_xc_is_doubly_stochastic():
    xc = np.asarray(qr.random_xc(8, qr.XcSpec.uniform(3), 42).value)
    assert np.allclose(xc.sum(axis=0), 1.0, atol=1e-12)
    assert np.allclose(xc.sum(axis=1), 1.0, atol=1e-12)
    assert xc.min() >= 0.0


def test_rounding_methods_agree_with_objective(nug12):
    xc = qr.random_xc(12, qr.XcSpec.uniform(2), 7).value
    x0 = qr.round_x0(nug12, xc)
    x1 = qr.golden_section_search(nug12, xc)
    x2 = qr.round_x2(nug12, xc)
    for res in (x0, x1, x2):
        assert qr.objective(nug12, res.perm) == pytest.approx(res.objective)
    assert x1.objective <= x2.objective  # theta2 is pre-evaluated
    assert x1.objective <= qr.round_theta(nug12, xc, 0.0).objective
    assert x2.theta == pytest.approx(qr.theta2(nug12))


def test_lap_against_bruteforce():
    rng = np.random.default_rng(3)
    cost = rng.uniform(-5, 5, size=(6, 6))
    fast = qr.solve_lap_min(cost)
    slow = qr.brute_force_lap(cost, qr.Sense.minimize)
    assert fast.value == pytest.approx(slow.value)
    assert fast.dual_feasible


def test_gamma_star_certification(nug12):
    report = qr.verify_basis_independence(nug12, 5, 1)
    assert report.passed
    assert report.gamma_closed_form == pytest.approx(qr.gamma_star(nug12))
    basis = qr.householder_basis(12)
    v = np.asarray(basis.V)
    assert np.allclose(v.T @ v, np.eye(11), atol=1e-12)
    assert np.allclose(v.T @ np.ones(12), 0.0, atol=1e-12)


def test_profile_and_csv(nug12):
    xc = qr.random_xc(12, qr.XcSpec.uniform(2), 5).value
    profile = qr.theta_profile(nug12, xc, 50, 100.0)
    assert len(profile.samples) == 50
    text = qr.profile_csv(profile)
    assert text.startswith("theta,objective,perm\n")
    assert len(text.splitlines()) == 51


def test_run_comparison_ratios(nug12):
    row = qr.run_comparison(nug12, qr.XcSpec.uniform(2), 3, 11)
    assert row.runs == 3
    for ratio in (row.mean_ratio0, row.mean_ratio1, row.mean_ratio2):
        assert 0.0 < ratio <= 1.0
    assert row.mean_ratio1 <= row.mean_ratio2


def test_parse_error_is_raised():
    with pytest.raises(ValueError):
        qr.parse_instance("2 0 1 1 0 0 2", "broken")


@pytest.mark.skipif("QAPROUND_CLI" not in os.environ, reason="CLI path not set")
def test_cli_round_runs():
    cli = os.environ["QAPROUND_CLI"]
    out = subprocess.run(
        [cli, "round", str(DATA / "nug12.dat"), "--method", "all", "--seed", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    lines = out.stdout.splitlines()
    assert lines[2] == "method,theta,objective,lap_solves,perm"
    assert len(lines) == 6
