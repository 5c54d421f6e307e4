"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

The lines bypass output capture, so they show up in a plain ``pytest`` run.
"""

import json
import subprocess
import sys
import time
from math import comb

import pytest

from quotdeg import appendix_a, checks, cli
from quotdeg.fixed_points import chow_rank, enumerate_components
from quotdeg.localization import ComponentContribution, normal_euler_class, plucker_degree
from quotdeg.vafa import VIQuery, vi_evaluate


@pytest.fixture
def report(capsys):
    def emit(number, title, passed, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if passed else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))
        assert passed, f"criterion {number} failed: {detail}"

    return emit


def test_1_degree_d3_via_cli(report):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "quotdeg", "degree", "--d", "3", "--method", "bott", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    elapsed = time.perf_counter() - start
    value = json.loads(proc.stdout)["total_degree"] if proc.returncode == 0 else None
    report(1, "degree --d 3 --method bott == 128 in < 1 s",
           value == 128 and elapsed < 1.0, f"got {value} in {elapsed:.2f} s")


def test_2_closed_form_d0_to_8(report):
    start = time.perf_counter()
    got = [plucker_degree(d, (0, 1, 2, 3)) for d in range(9)]
    elapsed = time.perf_counter() - start
    want = [2 ** (2 * d + 1) for d in range(9)]
    report(2, "P_d == 2^(2d+1) for d = 0..8 in < 30 s", got == want and elapsed < 30, f"{got}, {elapsed:.1f} s")


def test_3_weight_invariance(report):
    weight_sets = checks.invariance_weight_sets()
    assert len(set(weight_sets)) == 5
    assert all(-50 <= x <= 50 for w in weight_sets[3:] for x in w)
    bad = {}
    for d in range(5):
        values = {w: plucker_degree(d, w) for w in weight_sets}
        if len(set(values.values())) != 1:
            bad[d] = values
    report(3, "weight invariance, d = 0..4, five weight vectors", not bad, f"weights {weight_sets}" if not bad else str(bad))


def test_4_oracle_agreement(report):
    rows = []
    ok = True
    for d in range(6):
        res = vi_evaluate(VIQuery(2, 4, d, (1,) * (4 * d + 4)))
        bott = plucker_degree(d)
        ok = ok and res.exact and res.value == bott
        rows.append(f"d={d}:{bott}/{res.value}")
    report(4, "Bott == exact Vafa-Intriligator for d = 0..5", ok, " ".join(rows))


def test_5_combinatorics(report):
    ok = True
    for d in range(21):
        comps = enumerate_components(d)
        ok = ok and len(comps) == 6 * (d + 1) and sum(chow_rank(c) for c in comps) == 6 * comb(d + 3, 3)
    d3 = enumerate_components(3)
    ok = ok and len(d3) == 24 and sum(chow_rank(c) for c in d3) == 120
    report(5, "6(d+1) components and rank sum 6*C(d+3,3) for d = 0..20", ok, "d=3: 24 components, chi 120")


def test_6_appendix_a_golden(report):
    w = (0, 1, 2, 3)
    compared, mismatched = [], []
    for e in appendix_a.ENTRIES:
        if not e.usable_denominator:
            continue
        c = e.resolved_component()
        if normal_euler_class(c, w).expand(*c.caps) == appendix_a.expand_denominator(e, w):
            compared.append(e.number)
        else:
            mismatched.append(e.number)
    bridge = checks.check_bridge_identity()
    ok = not mismatched and set(range(1, 14)) <= set(compared) and bridge.passed
    report(6, "Appendix A denominators match, plus bridge identity", ok,
           f"matched {compared}, mismatched {mismatched}, bridge {bridge.passed}")


def test_7_series_ring_laws(report):
    start = time.perf_counter()
    res = checks.check_series_laws(trials=1000)
    elapsed = time.perf_counter() - start
    report(7, "series ring laws on 1000 random trials in < 10 s", res.passed and elapsed < 10,
           f"{res.detail}, {elapsed:.1f} s")


def test_8_error_paths(report, monkeypatch, capsys):
    proc = subprocess.run(
        [sys.executable, "-m", "quotdeg", "degree", "--d", "3", "--weights", "0,1,2,2"],
        capture_output=True, text=True, check=False,
    )
    usage_ok = proc.returncode == 1 and "weights must be strictly increasing" in proc.stderr

    real = cli.component_contributions

    def sign_fault(d, w, jobs=1):
        out = real(d, w, jobs=jobs)
        return [ComponentContribution(out[0].component, -out[0].value)] + out[1:]

    monkeypatch.setattr(cli, "component_contributions", sign_fault)
    code = cli.main(["degree", "--d", "3", "--method", "bott"])
    err = capsys.readouterr().err
    fault_ok = code == 2 and "NonIntegralSum" in err
    report(8, "bad weights exit 1; injected sign fault exits 2 with NonIntegralSum",
           usage_ok and fault_ok, f"usage exit {proc.returncode}, fault exit {code}")
