"""Acceptance suite: every shipped guarantee, at its stated tolerance.

Each test prints one `[criterion N] PASS/FAIL` line (visible with `pytest -s`
or in the failure output) and enforces the documented runtime bound.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from interfere import checks
from interfere.engine import combine, interfere_hyp
from interfere.padic_rule import padic_slit_profile
from interfere.profiles import theta_bounds


def _verdict(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number}] {status}: {label}{suffix}", flush=True)
    assert ok, f"criterion {number} failed: {label}{suffix}"


def _timed(func, *args, **kwargs):
    start = time.perf_counter()
    result = func(*args, **kwargs)
    return result, time.perf_counter() - start


def test_criterion_1_two_slit_table():
    start = time.perf_counter()
    table = {s.epsilon: s.probability for s in padic_slit_profile(3, 0, 8)}
    amplitude = Fraction(1)  # A = p**(-2l) with l = 0
    expected = {
        1: amplitude,
        2: amplitude / 9,
        4: amplitude,
        5: amplitude / 9,
        7: amplitude,
        8: amplitude / 81,
    }
    elapsed = time.perf_counter() - start
    _verdict(
        1,
        "p-adic two-slit table (p=3, l=0) exact",
        table == expected and elapsed < 1.0,
        f"{len(table)} entries in {elapsed:.3f}s",
    )


def test_criterion_2_lambda_range_theorem():
    result, elapsed = _timed(checks.check_lambda_range, primes=(2, 3, 5), max_order=4)
    _verdict(
        2,
        "lambda range theorem, exhaustive sweep (orders <= 4, units mod p**4)",
        result.violations == 0 and result.cases >= 14000 and elapsed < 30.0,
        f"{result.cases} cases, {result.violations} violations in {elapsed:.2f}s",
    )


def test_criterion_3_amplitude_oracle_equivalence():
    start = time.perf_counter()
    trig = checks.check_amplitude_oracle_trig(n=50)
    hyp = checks.check_amplitude_oracle_hyp(n=50)
    elapsed = time.perf_counter() - start
    _verdict(
        3,
        "amplitude-oracle equivalence on 50^3 grids, <= 1e-12",
        trig.violations == 0
        and hyp.violations == 0
        and trig.cases == 50 ** 3
        and hyp.cases == 2 * 50 ** 3
        and elapsed < 10.0,
        f"{trig.cases + hyp.cases} comparisons in {elapsed:.2f}s",
    )


def test_criterion_4_theta_bound_closed_forms():
    start = time.perf_counter()
    sweep = checks.check_theta_bounds(cases=1000)
    # q+ = 7 witness: p1 = p2 = 1/16
    theta_max, theta_min = theta_bounds(1 / 16, 1 / 16)
    witness_plus = (
        abs(theta_max - math.log(7 + 4 * math.sqrt(3))) <= 1e-12
        and abs(combine(1 / 16, 1 / 16, math.cosh(theta_max)) - 1) <= 1e-12
        and interfere_hyp(1 / 16, 1 / 16, theta_max, 1) == pytest.approx(1.0, abs=1e-12)
        and theta_min == 0.0
    )
    # q- = 5/4 witness: p1 = 1/4, p2 = 1/16
    _, theta_min2 = theta_bounds(1 / 4, 1 / 16)
    witness_minus = (
        abs(theta_min2 - math.log(2)) <= 1e-12
        and abs(combine(1 / 4, 1 / 16, -math.cosh(theta_min2))) <= 1e-12
    )
    elapsed = time.perf_counter() - start
    _verdict(
        4,
        "theta_max/theta_min closed forms (10^3 random + witnesses), <= 1e-12",
        sweep.violations == 0 and witness_plus and witness_minus and elapsed < 1.0,
        f"{sweep.cases} cases in {elapsed:.3f}s",
    )


def test_criterion_5_hyperbolic_algebra_laws():
    result, elapsed = _timed(checks.check_hyperbolic_laws, cases_per_law=10000)
    _verdict(
        5,
        "split-complex algebra laws, 10^4 cases per law (exact / 1e-10)",
        result.violations == 0 and result.cases == 40000 and elapsed < 5.0,
        f"{result.cases} cases in {elapsed:.2f}s",
    )


def test_criterion_6_ultrametric_suite():
    start = time.perf_counter()
    valuation = checks.check_ultrametric(cases=10000)
    balls = checks.check_ball_geometry(cases=2000)
    elapsed = time.perf_counter() - start
    _verdict(
        6,
        "ultrametric suite, exact, 10^4 valuation + 2*10^3 ball cases",
        valuation.violations == 0
        and balls.violations == 0
        and valuation.cases >= 10000
        and elapsed < 5.0,
        f"{valuation.cases + balls.cases} cases in {elapsed:.2f}s",
    )


def test_criterion_7_total_probability_coherence():
    result, elapsed = _timed(checks.check_total_probability, cases=1000)
    _verdict(
        7,
        "total-probability coherence (pi/2 collapse exact, state expansion 1e-12)",
        result.violations == 0 and result.cases >= 1000 and elapsed < 5.0,
        f"{result.cases} cases in {elapsed:.2f}s",
    )


def _run_cli(args):
    completed = subprocess.run(
        [sys.executable, "-m", "interfere", *args],
        capture_output=True,
        timeout=300,
    )
    return completed.returncode, completed.stdout, completed.stderr


def test_criterion_8_cli_determinism(tmp_path):
    config = tmp_path / "two_slit.cfg"
    config.write_text(
        "mode = trig\npb1 = 1/2\npb2 = 1/2\np11 = 1/2\np12 = 1/2\n"
        "p21 = 1/2\np22 = 1/2\ntheta1 = 0\ntheta2 = pi\n"
    )
    commands = [
        (["fit", "0.36", "0.16", "0.76"], 0),
        (["fit", "--mode", "exact", "0.36", "0.16", "0.76"], 0),
        (["fit", "0.25", "0.25", "0.5"], 0),
        (["fit", "0.25", "0", "0.3"], 3),
        (["profile", "trig", "--p1", "0.25", "--p2", "0.25", "--max", "6.2832", "--n", "100"], 0),
        (
            ["profile", "hyp", "--p1", "0.0625", "--p2", "0.0625", "--sign", "+", "--auto-window", "--n", "50"],
            0,
        ),
        (
            ["profile", "piecewise", "--p1", "0.25", "--p2", "0.0625", "--intervals", "0:0.5:-,0.8:1.5:+", "--n", "40"],
            0,
        ),
        (["profile", "padic", "--p", "3", "--l", "0", "--eps-max", "8"], 0),
        (["totalprob", "--config", str(config)], 0),
        (["padic", "--p", "3", "--alpha1", "1", "--alpha2", "1", "--eps", "2"], 0),
        (["padic", "--p", "3", "--table", "--eps-max", "8"], 0),
        (["check", "--fast"], 0),
    ]
    mismatches = []
    for args, expected_code in commands:
        first = _run_cli(args)
        second = _run_cli(args)
        if first != second:
            mismatches.append(f"{' '.join(args)}: runs differ")
        if first[0] != expected_code:
            mismatches.append(f"{' '.join(args)}: exit {first[0]} != {expected_code}")

    # file output determinism
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    _run_cli(["profile", "padic", "--p", "5", "--l", "1", "--eps-max", "30", "--out", str(out_a)])
    _run_cli(["profile", "padic", "--p", "5", "--l", "1", "--eps-max", "30", "--out", str(out_b)])
    if out_a.read_bytes() != out_b.read_bytes():
        mismatches.append("--out files differ")

    _verdict(
        8,
        "CLI determinism: documented commands are byte-identical across runs",
        not mismatches,
        "; ".join(mismatches) if mismatches else f"{len(commands)} commands x 2 runs",
    )
