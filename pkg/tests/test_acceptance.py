"""Exit criteria.  Each test prints one PASS/FAIL line (also repeated in the
terminal summary) and then asserts."""
import json
import time

import pytest

from monogenica import inner, quaternion, sl2, spinor, verify
from monogenica.cli import main
from monogenica.inner import PiScaledRational
from monogenica.mutations import MUTATIONS
from monogenica.quaternion import build_h, quaternion_basis
from monogenica.sl2 import harmonic_basis
from monogenica.spinor import monogenic_basis

pytestmark = pytest.mark.acceptance
RESULTS: list[str] = []


def report(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def cold_caches():
    spinor.clear_caches()
    quaternion.clear_caches()
    sl2._harmonic_polys.cache_clear()


def suite(selectors, max_degree=12):
    cold_caches()
    start = time.perf_counter()
    reports = verify.run(max_degree, selectors, workers=1)
    elapsed = time.perf_counter() - start
    failed = [f"{r.check}/{r.family}/k={r.degrees}" for r in reports if not r.passed]
    return reports, failed, elapsed


def test_criterion_1_harmonic_suite():
    reports, failed, t = suite(["harmonic-laplacian", "harmonic-weight", "harmonic-extremes",
                                "harmonic-size"])
    ok = not failed and t <= 60 and len(reports) == 4 * 13
    report(1, ok, f"harmonic suite k<=12, {len(reports)} checks, {len(failed)} failed, {t:.1f}s (limit 60s)")


def test_criterion_2_spinor_suite():
    reports, failed, t = suite(["spinor-monogenic", "spinor-decomposition", "spinor-appell",
                                "spinor-recurrence", "spinor-weight", "spinor-size"])
    realizations = {r.family for r in reports}
    ok = not failed and t <= 120 and realizations == {"spinor+", "spinor-"}
    report(2, ok, f"spinor suite k<=12 both realizations, {len(reports)} checks, "
                  f"{len(failed)} failed, {t:.1f}s (limit 120s)")


def test_criterion_3_quaternion_suite():
    reports, failed, t = suite(["quat-monogenic", "quat-appell", "quat-primitive", "quat-weight"])
    ok = not failed and t <= 120 and len(reports) == 4 * 13
    report(3, ok, f"quaternion suite k<=12, {len(reports)} checks, {len(failed)} failed, "
                  f"{t:.1f}s (limit 120s)")


def _l2_entries_pi_rational(G):
    return all(isinstance(e.re, PiScaledRational) and isinstance(e.im, PiScaledRational)
               for row in G for e in row)


def test_criterion_4_orthogonality():
    problems = []
    for k in range(13):
        fams = {"harmonic": [e.poly for e in harmonic_basis(k)],
                "spinor+": monogenic_basis(k, "S4+"), "spinor-": monogenic_basis(k, "S4-"),
                "h-columns": [build_h(k, j) for j in range(2 * k + 2)]}
        for name, fam in fams.items():
            if not inner.is_diagonal(inner.gram_matrix(fam, inner.FISCHER)):
                problems.append(f"fischer {name} k={k}")
            if k <= 8:
                G = inner.gram_matrix(fam, inner.L2BALL)
                if not (inner.is_diagonal(G) and _l2_entries_pi_rational(G)):
                    problems.append(f"l2 {name} k={k}")
        if k <= 8 and not inner.offdiagonal_zero(inner.gram_matrix(quaternion_basis(k), inner.L2BALL)):
            problems.append(f"quaternionic k={k}")
    report(4, not problems, "Fischer Gram diagonal k<=12 (harmonic, spinor+-, h columns); "
                            "L2 ball diagonal with Rational*pi entries k<=8; quaternionic off-diagonal "
                            f"zero k<=8; problems: {problems or 'none'}")


def test_criterion_5_closed_forms():
    from monogenica.closed_forms import cross_validate, sample_points
    pts = sample_points(200, seed=0, theta_margin=0.05)
    worst = {}
    for family in ("harmonic", "spinor+", "spinor-", "quaternion"):
        worst[family] = max(cross_validate(family, k, pts, 1e-9).max_rel_error for k in range(11))
    ok = all(v <= 1e-9 for v in worst.values())
    detail = ", ".join(f"{f} {v:.1e}" for f, v in worst.items())
    report(5, ok, f"closed forms k<=10, 200 points, theta in [0.05, pi-0.05], max rel error {detail} "
                  "(limit 1e-9)")


def test_criterion_6_operator_identities():
    reports, failed, t = suite(["operators"])
    ok = not failed and t <= 30 and len(reports) == 4 and verify.OPERATOR_TRIALS == 50 \
        and verify.OPERATOR_MAX_DEGREE == 8
    report(6, ok, f"operator identities on 50 random polynomials of degree <= 8, {len(failed)} failed, "
                  f"{t:.1f}s (limit 30s)")


def test_criterion_7_mutation_sensitivity(capsys):
    outcomes = {}
    for name in MUTATIONS:
        code = main(["verify", "--max-degree", "3", "--inject-mutation", name])
        out = capsys.readouterr().out
        failures = [json.loads(l) for l in out.splitlines() if json.loads(l)["status"] == "fail"]
        outcomes[name] = (code, len(failures), all(f["counterexample"] for f in failures))
    ok = all(code == 1 and n > 0 and has_cx for code, n, has_cx in outcomes.values())
    detail = ", ".join(f"{m}: exit {c}, {n} failing checks" for m, (c, n, _) in outcomes.items())
    report(7, ok, f"mutations detected by verify --max-degree 3 ({detail})")
