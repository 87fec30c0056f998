"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the whole suite is desk-scale and finishes in well under a minute.
"""

import io
import math
import subprocess
import sys

import numpy as np
import pytest

from combradii import (
    CombinationSpec,
    RadiusQuery,
    build_radius_polynomial,
    certify_product_bound,
    certify_weight_maximum,
    certify_weighted_sum_bounds,
    combine,
    decomposition_discrepancy,
    koebe,
    min_re_on_circles,
    quadratic,
    radius,
    univalence_radius,
    verify_radius,
)
from combradii.cli import run
from combradii.transforms import TransformKind

KOEBE_CONVEXITY_RADIUS = 2.0 - math.sqrt(3.0)


def _report(line: str) -> None:
    print(f"[acceptance] {line}: PASS")


def sec(alpha: float) -> float:
    return 1.0 / math.cos(alpha / 2.0)


def test_criterion_1_known_radius_anchors():
    for A in (1.1, 1.3, 1.5, 1.8, 2.0):
        res = radius(RadiusQuery("coa", "convexity", 1, (0.0,), A=A))
        assert abs(res.radius - (A - math.sqrt(A * A - 1.0))) <= 1e-10, f"A={A}"
    _report("criterion 1, known-radius anchors")


def test_criterion_2_koebe_convexity_witness():
    kind = TransformKind.convexity()
    inside, _ = min_re_on_circles(kind, koebe(0.0), KOEBE_CONVEXITY_RADIUS * (1.0 - 1e-3))
    assert inside > 0.0
    outside, _ = min_re_on_circles(kind, koebe(0.0), KOEBE_CONVEXITY_RADIUS * (1.0 + 1e-2))
    assert outside < 0.0
    _report("criterion 2, Koebe convexity witness")


def test_criterion_3_closed_form_reduction():
    rho = 0.9
    for alpha in np.linspace(0.0, 3.1, 100):
        want = rho * (sec(alpha) - math.tan(alpha / 2.0))
        got = univalence_radius(1, [float(alpha)], rho)
        assert abs(got - want) <= 1e-12, f"alpha={alpha}"
    _report("criterion 3, closed-form reduction")


def test_criterion_4_randomized_bound_certification():
    rep = certify_weighted_sum_bounds(trials=100_000, seed=191, max_pairs=4)
    assert rep.violations == 0, f"worst slack {rep.worst_slack}"
    rep_a = certify_product_bound(trials=10_000, seed=191)
    assert rep_a.violations == 0, f"worst slack {rep_a.worst_slack}"
    _report("criterion 4, weighted-sum and product bound certification")


def test_criterion_5_weight_maximum():
    rep = certify_weight_maximum(trials=1_000, seed=191, loc_tol=1e-8, val_tol=1e-10)
    assert rep.violations == 0, f"worst slack {rep.worst_slack}"
    _report("criterion 5, pair-weight maximum at b=1")


def test_criterion_6_decomposition_equivalence():
    rng = np.random.default_rng(29)
    pool = [koebe(0.0), koebe(math.pi / 2), koebe(math.pi), quadratic(0.5)]
    checked = 0
    worst = 0.0
    while checked < 1_000:
        n = int(rng.integers(1, 4))
        alphas = rng.uniform(0.0, 0.9 * math.pi, n)
        bs = np.exp(rng.uniform(np.log(0.2), np.log(5.0), n))
        fns = [pool[int(i)] for i in rng.integers(0, len(pool), 2 * n)]
        spec = CombinationSpec.uniform(alphas, fns, b=bs)
        z = complex(0.5 * math.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
        _, d1, _ = combine(spec).jet(np.asarray(z))
        if abs(complex(d1)) < 1e-3:
            continue  # keep the comparison well conditioned; not a domain guard
        worst = max(worst, decomposition_discrepancy(spec, z))
        checked += 1
    assert worst <= 1e-10, f"worst discrepancy {worst}"
    _report("criterion 6, quotient/decomposition equivalence")


def test_criterion_7_corollary_consistency():
    alpha, p, A = 0.8, 0.45, 1.6
    s = sec(alpha)

    # n=1 builder against the printed two-function formula; its secant sum is
    # printed over both indices, which doubles the single pair angle's term
    poly_s_conc = build_radius_polynomial(RadiusQuery("s", "concavity", 1, (alpha,), A=A))
    printed_pair_linear = -2.0 / (A - 1.0) * (A + 1.0 + 4.0 * (s + s))
    assert poly_s_conc.coeffs[2] == pytest.approx(1.0, abs=1e-14)
    assert poly_s_conc.coeffs[1] == pytest.approx(printed_pair_linear + 2.0 / (A - 1.0) * 4.0 * s, rel=1e-14)

    stated_sp_conv = build_radius_polynomial(RadiusQuery("sp", "convexity", 1, (alpha,), p=p, variant="as-stated"))
    printed_sp_conv = (p, -(1 + p * p) * (1 + 2 * s), 2 * p * (1 + 4 * s), (1 + p * p) * (-1 + s), p)
    assert stated_sp_conv.coeffs == pytest.approx(printed_sp_conv, rel=1e-14)

    proof_coa_conc = build_radius_polynomial(RadiusQuery("coa", "concavity", 1, (alpha,), A=A))
    stated_coa_conc = build_radius_polynomial(RadiusQuery("coa", "concavity", 1, (alpha,), A=A, variant="as-stated"))
    shared = (1.0, -2.0 / (A - 1.0) * (A + 1.0 + 2.0 * A * s))
    assert proof_coa_conc.coeffs[:2] == pytest.approx(shared, rel=1e-14)
    assert stated_coa_conc.coeffs[:2] == pytest.approx(shared, rel=1e-14)
    assert proof_coa_conc.coeffs[2] == pytest.approx(1.0, abs=1e-14)
    assert stated_coa_conc.coeffs[2] == pytest.approx((A - 5.0) / (A - 1.0), rel=1e-14)

    poly_coa_conv = build_radius_polynomial(RadiusQuery("coa", "convexity", 1, (alpha,), A=A))
    assert poly_coa_conv.coeffs == pytest.approx((1.0, -2.0 * A * s, 1.0), rel=1e-14)

    poly_sp_conc = build_radius_polynomial(RadiusQuery("sp", "concavity", 1, (alpha,), p=p))
    printed_sp_conc = (
        p * p,
        -2 * p * (1 + p * p + 2 * s),
        (p**4 + 1) * (1 - 2 * s) - p * p * (3 - 4 * s),
        (4 + 4 * s) * (p**3 + p),
        (1 - 2 * s) - p * p * (3 - 4 * s) + 1,
        -2 * (p**3 + p) * (1 + s),
        p * p,
    )
    assert poly_sp_conc.coeffs == pytest.approx(printed_sp_conc, rel=1e-14)
    _report("criterion 7, two-function corollary consistency")


def test_criterion_8_positivity_within_radius():
    rng = np.random.default_rng(37)
    cases = [("s", "concavity"), ("sp", "convexity"), ("sp", "concavity"),
             ("coa", "convexity"), ("coa", "concavity")]
    failures = []
    for cls, mode in cases:
        for _ in range(50):
            n = int(rng.integers(1, 4))
            alphas = tuple(rng.uniform(0.0, 0.9 * math.pi, n))
            p = float(rng.uniform(0.2, 0.8)) if cls == "sp" else None
            A = float(rng.uniform(1.01, 2.0)) if cls in ("s", "coa") else None
            query = RadiusQuery(cls, mode, n, alphas, p=p, A=A)
            report = verify_radius(query, margin=0.95)
            if not report.passed:
                failures.append((query, report.worst_z, report.min_re))
    assert not failures, f"positivity failures: {failures}"
    _report("criterion 8, positivity within 0.95 of every computed radius")


def test_criterion_9_bracket_sign_properties():
    rng = np.random.default_rng(41)
    for _ in range(100):
        n = int(rng.integers(1, 5))
        alphas = tuple(rng.uniform(0.0, 0.95 * math.pi, n))
        p = float(rng.uniform(0.05, 0.95))
        A = float(rng.uniform(1.01, 2.0))
        poly_s_conc = build_radius_polynomial(RadiusQuery("s", "concavity", n, alphas, A=A))
        assert poly_s_conc(0.0) == 1.0 and poly_s_conc(1.0) < 0.0
        poly_coa_conv = build_radius_polynomial(RadiusQuery("coa", "convexity", n, alphas, A=A))
        assert poly_coa_conv(0.0) == 1.0 and poly_coa_conv(1.0) < 0.0
        poly_sp_conc = build_radius_polynomial(RadiusQuery("sp", "concavity", n, alphas, p=p))
        assert poly_sp_conc(0.0) == pytest.approx(p * p, rel=1e-15) and poly_sp_conc(0.0) > 0.0
    _report("criterion 9, bracket endpoint signs")


DOCUMENTED_COMMANDS = [
    ["radius", "--class", "coa", "--A", "2", "--mode", "convexity", "--n", "1", "--alpha", "0"],
    ["radius", "--class", "sp", "--p", "0.5", "--mode", "concavity", "--n", "1",
     "--alpha", "0", "--format", "json"],
    ["sweep", "--class", "s", "--mode", "concavity", "--A", "2", "--n", "1",
     "--axis", "alpha1", "--range", "0:3.0:25", "--format", "csv"],
    ["lemma", "--trials", "100000", "--seed", "7"],
    ["verify", "--class", "coa", "--A", "2", "--mode", "convexity", "--n", "1", "--alpha", "0"],
]


def test_criterion_10_cli_determinism():
    for argv in DOCUMENTED_COMMANDS:
        first, second = io.StringIO(), io.StringIO()
        code1 = run(list(argv), out=first)
        code2 = run(list(argv), out=second)
        assert code1 == code2 == 0
        assert first.getvalue() == second.getvalue(), f"nondeterministic output for {argv}"
    cmd = [sys.executable, "-m", "combradii"] + DOCUMENTED_COMMANDS[0]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    _report("criterion 10, byte-identical CLI output")
