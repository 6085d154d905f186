"""Acceptance suite: each test checks one contract criterion at its stated
tolerance and always prints a one-line PASS/FAIL verdict."""

import os
import random
import subprocess
import sys

import pytest

from conftest import field_for
from helpers import odd_primes_upto
from legendre_hgf.characters import MultChar, jacobi_sum
from legendre_hgf.classical import (
    PERIOD_OPERATORS,
    ode_recurrence_check,
    params_from_operator,
    period_params,
)
from legendre_hgf.congruence import check_thm_congruence, match_table
from legendre_hgf.curves import (
    LegendreCurve,
    brute_force_count,
    formula_count_with_residual,
    hasse_witt,
)
from legendre_hgf.ffhyper import (
    ff_2f1_charsum,
    ff_2f1_pointsum,
    inversion_transform_residual,
)
from legendre_hgf.survey import rows_from_csv, survey_primes

SAMPLED_PRIMES = [5, 13, 17, 29, 101]
SPECS_PER_PRIME = 500


@pytest.fixture
def announce(capsys):
    def _announce(number: int, name: str, failures: list):
        verdict = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"acceptance {number} ({name}): {verdict}")
        assert not failures, f"criterion {number} failed: {failures[:5]} " f"({len(failures)} total)"

    return _announce


def _random_specs(p: int, count: int, seed: int):
    rng = random.Random(seed * 100_003 + p)
    field = field_for(p)
    for _ in range(count):
        yield (
            MultChar(field, rng.randrange(p - 1)),
            MultChar(field, rng.randrange(p - 1)),
            MultChar(field, rng.randrange(p - 1)),
            rng.randrange(p),
        )


def test_criterion_1_quartic_count_formula_exactness(announce):
    failures = []
    for p in survey_primes(229):
        field = field_for(p)
        for lam in range(2, p):
            curve = LegendreCurve(field, lam)
            brute = brute_force_count(curve)
            formula, resid = formula_count_with_residual(curve)
            if formula != brute:
                failures.append(f"p={p} lam={lam}: {formula} != {brute}")
            if resid >= 1e-6 * p:
                failures.append(f"p={p} lam={lam}: residual {resid:.2e}")
    announce(1, "count formula equals brute force, p <= 229", failures)


def test_criterion_2_definition_equivalence(announce):
    failures = []
    for p in SAMPLED_PRIMES:
        for A, B, C, x in _random_specs(p, SPECS_PER_PRIME, seed=2):
            delta = abs(ff_2f1_charsum(A, B, C, x) - ff_2f1_pointsum(A, B, C, x))
            if delta >= 1e-8:
                failures.append(f"p={p} ({A.k},{B.k},{C.k}|{x}): {delta:.2e}")
    announce(2, "character-sum and point-sum 2F1 agree", failures)


def test_criterion_3_inversion_transform(announce):
    failures = []
    for p in SAMPLED_PRIMES:
        for A, B, C, x in _random_specs(p, SPECS_PER_PRIME, seed=3):
            if x == 0:
                continue
            resid = inversion_transform_residual(A, B, C, x)
            if resid >= 1e-8:
                failures.append(f"p={p} ({A.k},{B.k},{C.k}|{x}): {resid:.2e}")
    announce(3, "x -> 1/x transformation identity", failures)


def test_criterion_4_truncated_series_congruence(announce):
    failures = []
    for m, d in [(1, 2), (1, 4), (3, 4)]:
        for p in odd_primes_upto(101):
            if p % d != 1:
                continue
            field = field_for(p)
            for x in range(1, p):
                report = check_thm_congruence(m, d, field, x)
                if not report.holds:
                    failures.append(
                        f"(m,d,p,x)=({m},{d},{p},{x}): "
                        f"{report.lhs_residue} != {report.rhs_residue}"
                    )
    announce(4, "truncated classical vs -p*2F1 congruence", failures)


def test_criterion_5_quadratic_period_match(announce):
    failures = []
    for p in survey_primes(101):
        field = field_for(p)
        for lam in range(2, p):
            rows = match_table(LegendreCurve(field, lam))
            quad = rows[1]
            if quad.holds is not True:
                failures.append(f"p={p} lam={lam}: {quad}")
            elif quad.rounding_residual >= 1e-6 * p:
                failures.append(f"p={p} lam={lam}: residual {quad.rounding_residual:.2e}")
    announce(5, "quadratic period row of the match table", failures)


def test_criterion_6_hasse_witt_trace_congruence(announce):
    failures = []
    off_block = [(0, 1), (1, 0), (1, 2), (2, 1)]
    for p in survey_primes(229):
        field = field_for(p)
        for lam in range(2, p):
            curve = LegendreCurve(field, lam)
            hw = hasse_witt(curve)
            ap_mod_p = (p + 1 - brute_force_count(curve)) % p
            if hw.trace != ap_mod_p:
                failures.append(f"p={p} lam={lam}: trace {hw.trace} != {ap_mod_p}")
            if any(hw.entries[i][j] != 0 for i, j in off_block):
                failures.append(f"p={p} lam={lam}: off-block entry nonzero")
    announce(6, "Hasse-Witt trace = a_p mod p, p <= 229", failures)


def test_criterion_7_period_ode_consistency(announce):
    failures = []
    for i in (1, 2, 3):
        if not ode_recurrence_check(period_params(i), 200):
            failures.append(f"period {i}: recurrence broken")
        if params_from_operator(*PERIOD_OPERATORS[i]) != period_params(i):
            failures.append(f"period {i}: operator read-off mismatch")
    announce(7, "period series solve their operators", failures)


def test_criterion_8_character_layer_properties(announce):
    failures = []
    for p in (5, 13, 29):
        field = field_for(p)
        tol = 1e-6 * p
        for k in range(p - 1):
            total = sum(MultChar(field, k)(x) for x in range(1, p))
            expected = p - 1 if k == 0 else 0
            if abs(total - expected) >= tol:
                failures.append(f"p={p}: orthogonality fails for k={k}")
        for a in range(1, p - 1):
            for b in range(1, p - 1):
                A, B = MultChar(field, a), MultChar(field, b)
                if (a + b) % (p - 1) != 0:
                    if abs(abs(jacobi_sum(A, B)) ** 2 - p) >= tol:
                        failures.append(f"p={p}: |J({a},{b})|^2 != p")
                if abs(jacobi_sum(A, B) - jacobi_sum(B, A)) >= tol:
                    failures.append(f"p={p}: J({a},{b}) asymmetric")
    announce(8, "orthogonality, Jacobi magnitude and symmetry", failures)


def _run_cli(args, extra_env=None):
    env = dict(os.environ)
    env.update(extra_env or {})
    return subprocess.run(
        [sys.executable, "-m", "legendre_hgf", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_criterion_9_cli_contract(announce, tmp_path):
    failures = []
    out = tmp_path / "survey.csv"
    proc = _run_cli(["survey", "--pmax", "29", "--out", str(out)])
    if proc.returncode != 0:
        failures.append(f"survey exit {proc.returncode}: {proc.stderr[-200:]}")
    else:
        rows = rows_from_csv(out.read_text())
        if len(rows) != sum(p - 2 for p in (5, 13, 17, 29)):
            failures.append(f"survey row count {len(rows)}")
        if rows_from_csv(out.read_text()) != rows:
            failures.append("survey CSV does not round-trip")

    proc = _run_cli(["count", "--p", "7", "--method", "formula"])
    if proc.returncode != 2:
        failures.append(f"count without lambda: exit {proc.returncode}")
    proc = _run_cli(["count", "--p", "7", "--lambda", "3", "--method", "formula"])
    if proc.returncode != 2:
        failures.append(f"count at p=7 formula: exit {proc.returncode}")

    proc = _run_cli(
        ["survey", "--pmax", "5"], extra_env={"LEGENDRE_HGF_FAULT": "1"}
    )
    if proc.returncode != 1:
        failures.append(f"corrupted survey: exit {proc.returncode}")
    announce(9, "CLI exit codes and CSV round-trip", failures)
