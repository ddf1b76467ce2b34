"""Acceptance criteria, one test (and one printed PASS/FAIL line) each."""

import csv
import math
import time

from hyperint import checks
from hyperint.asymptotics import Family, asym_li
from hyperint.cli import main
from hyperint.families import IntegralSpec, definite, fading_capacity, li
from hyperint.oracles import adaptive_quadrature, oscillatory_tail_quadrature
from hyperint.special_core import gamma


def test_01_dirichlet_value(criterion):
    start = time.perf_counter()
    worst = 0.0
    for lam in (1.0, 2.0, 0.5):
        v = definite(IntegralSpec(Family.SI, 1, 1, lam), -math.inf, math.inf)
        worst = max(worst, abs(v - math.pi / lam) / (math.pi / lam))
    elapsed = time.perf_counter() - start
    criterion("1", worst <= 1e-8 and elapsed < 1.0,
              f"Si(1,1,lam) over the real line vs pi/lam, lam in 1,2,0.5: max rel err {worst:.2e}, {elapsed:.3f}s")


def test_02_power_closed_forms(criterion):
    start = time.perf_counter()
    exact, worst = True, 0.0
    for a in (1, 2, 3):
        lam = 1.0
        e = 1.0 / (2.0 * a)
        closed = (2.0 / lam) ** (1.0 / a) * gamma(e + 1.0) / gamma(1.5 - e) * math.sqrt(math.pi) / 2.0
        spec = IntegralSpec(Family.SI, a, a, lam)
        v = definite(spec, 0, math.inf)
        exact &= v == closed
        q = oscillatory_tail_quadrature(spec, 0.0, tol=1e-9)
        worst = max(worst, abs(q.value - closed))
    elapsed = time.perf_counter() - start
    criterion("2", exact and worst <= 1e-5 and elapsed < 10.0,
              f"beta=alpha in 1,2,3 over (0,inf): bit-identical={exact}, "
              f"max |tail oracle - closed| {worst:.2e}, {elapsed:.3f}s")


def _suite_line(label, report, elapsed, limit, what):
    failures = [c.detail for c in report.cases if not c.passed]
    detail = f"{what}: {report.n_passed}/{len(report.cases)} passed, {elapsed:.2f}s"
    if failures:
        detail += f"; first failure {failures[0]}"
    return report.passed and elapsed < limit, detail


def test_03_ftc_sweep(criterion):
    start = time.perf_counter()
    report = checks.ftc_suite(cases=200)
    ok, detail = _suite_line("3", report, time.perf_counter() - start, 30.0, "central-difference sweep")
    criterion("3", ok, detail)


def test_04_oracle_equivalence(criterion):
    start = time.perf_counter()
    report = checks.oracle_suite(cases=50)
    ok, detail = _suite_line("4", report, time.perf_counter() - start, 60.0,
                             "50 intervals per family vs adaptive quadrature")
    criterion("4", ok, detail)


def test_05_identities(criterion):
    report = checks.identities_suite(cases=100)
    worst = max(float(c.detail.split("residual=")[1].split()[0]) for c in report.cases)
    criterion("5", report.passed,
              f"100 tuples x 4 identities: {report.n_passed}/{len(report.cases)} passed, max residual {worst:.2e}")


def test_06_asymptotic_accuracy(criterion):
    report = checks.asymptotics_suite()
    detail = "; ".join(f"{c.name} {c.detail.replace('relative errors ', '')}" for c in report.cases)
    criterion("6", report.passed, detail)


def _li_quad(x):
    return adaptive_quadrature(lambda t: 1.0 / math.log(t), 2.0, x, tol=1e-13 * x).value


def test_07a_li_series(criterion):
    worst = 0.0
    for x in (10.0, 1e2, 1e3, 1e4):
        ref = _li_quad(x)
        worst = max(worst, abs(li(2.0, x) - ref) / ref)
    criterion("7a", worst <= 1e-9, f"li(2,x) vs quadrature for x=10..1e4: max rel err {worst:.2e}")


def test_07b_li_asymptotic(criterion):
    ref = _li_quad(1e6)
    v = asym_li(2.0, 1e6)
    rel = abs(v - ref) / ref
    criterion("7b", rel <= 5e-3, f"asym_li(2,1e6)={v:.6g} vs quadrature {ref:.6g}: rel err {rel:.2e} (bound 5e-3)")


def test_08_prime_counts(criterion):
    start = time.perf_counter()
    report = checks.primes_suite()
    elapsed = time.perf_counter() - start
    pis = [c.detail.split()[1] for c in report.cases]
    criterion("8", report.passed and elapsed < 20.0,
              f"|li-pi| < |x/ln x - pi| at 1e3..1e6 ({', '.join(pis)}): "
              f"{report.n_passed}/{len(report.cases)}, {elapsed:.2f}s")


def _sine_table_rows(tmp_path):
    path = tmp_path / "si.csv"
    code = main(["table", "--family", "si", "--beta", "1", "--alpha", "1", "--lambda", "1",
                 "--x-min", "-30", "--x-max", "30", "--steps", "601", "--out", str(path)])
    assert code == 0
    with open(path, newline="") as fh:
        return {float(r["x"]): float(r["value"]) for r in csv.DictReader(fh)}


def test_09a_sine_table_endpoints(tmp_path, criterion):
    rows = _sine_table_rows(tmp_path)
    g0, gl, gr = rows[0.0], rows[-30.0], rows[30.0]
    ok = len(rows) == 601 and g0 == 0.0 and abs(gr - math.pi / 2) <= 0.05 and abs(gl + math.pi / 2) <= 0.05
    criterion("9a", ok, f"table Si(1,1,1) on [-30,30]: G(0)={g0!r}, G(-30)={gl:.6f}, G(30)={gr:.6f}")


def test_09b_sine_table_bound(tmp_path, criterion):
    rows = _sine_table_rows(tmp_path)
    peak_x = max(rows, key=lambda x: abs(rows[x]))
    peak = abs(rows[peak_x])
    criterion("9b", peak <= math.pi / 2 + 0.15,
              f"max|G| = {peak:.6f} at x={peak_x} vs bound pi/2+0.15 = {math.pi / 2 + 0.15:.6f}")


def test_10_fading_capacity(criterion):
    worst = 0.0
    for p in (0.5, 1.0, 10.0):
        ref = adaptive_quadrature(lambda t: math.log2(1.0 + p * t) * math.exp(-t), 0.0, 50.0, tol=1e-13).value
        worst = max(worst, abs(fading_capacity(p) - ref))
    criterion("10", worst <= 1e-6, f"capacity vs quadrature on (0,50) for P=0.5,1,10: max abs err {worst:.2e}")
