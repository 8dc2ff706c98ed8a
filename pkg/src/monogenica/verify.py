"""Registry of verification checks and a runner that streams reports.

Each check is run per degree k (and per realization for the spinor family)
and returns ``None`` on success or a JSON-serializable counterexample.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import closed_forms, inner, quaternion, sl2, spinor
from .core import MultiPoly, random_poly
from .errors import DecompositionMismatch
from .mutations import inject
from .quaternion import QuatPoly
from .spinor import Realization, SpinorPoly

L2_MAX_DEGREE = 8
CLOSED_FORM_POINTS = 200
CLOSED_FORM_TOLERANCE = 1e-9
OPERATOR_TRIALS = 50
OPERATOR_MAX_DEGREE = 8


@dataclass
class VerificationReport:
    check: str
    family: str
    degrees: tuple[int, int] | None
    status: str
    counterexample: dict | None = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = asdict(self)
        out["degrees"] = list(self.degrees) if self.degrees is not None else None
        return out


def _residual(label: str, obj, **where) -> dict:
    return {**where, "identity": label, "residual": obj.to_json()}


def _first_nonzero(items: Iterable, label: str):
    for where, residual in items:
        if not residual.is_zero():
            return _residual(label, residual, **where)
    return None


# ----- harmonic -------------------------------------------------------------

def check_harmonic_laplacian(k, _r=None):
    return _first_nonzero((({"j": e.j}, sl2.laplacian(e.poly)) for e in sl2.harmonic_basis(k)),
                          "laplacian(f^k_j) = 0")


def check_harmonic_weight(k, _r=None):
    return _first_nonzero(
        (({"j": e.j}, sl2.op_H(e.poly) - e.poly.scale(e.k - e.j)) for e in sl2.harmonic_basis(k)),
        "H f^k_j = (k-j) f^k_j")


def check_harmonic_extremes(k, _r=None):
    basis = sl2.harmonic_basis(k)
    return _first_nonzero([({"j": 0}, sl2.op_Xplus(basis[0].poly)),
                           ({"j": 2 * k}, sl2.op_Xminus(basis[-1].poly))],
                          "X+ f^k_0 = 0 and X- f^k_2k = 0")


def check_harmonic_size(k, _r=None):
    basis = sl2.harmonic_basis(k)
    zeros = [e.j for e in basis if e.poly.is_zero()]
    wrong_degree = [e.j for e in basis if not e.poly.is_homogeneous(k)]
    if len(basis) != 2 * k + 1 or zeros or wrong_degree:
        return {"identity": "2k+1 nonzero k-homogeneous elements", "size": len(basis),
                "zero_indices": zeros, "inhomogeneous_indices": wrong_degree}
    return None


# ----- spinor ---------------------------------------------------------------

def check_spinor_monogenic(k, r):
    for j, F in enumerate(spinor.monogenic_basis(k, r)):
        first, second = spinor.cr_residual(F)
        if first or second:
            return {"j": j, "identity": "cr_residual(F^k_j) = (0, 0)",
                    "residual": [first.to_json(), second.to_json()]}
    return None


def check_spinor_decomposition(k, r):
    for j, F in enumerate(spinor.monogenic_basis(k, r)):
        try:
            spinor.decompose_against_harmonics(F, k, j)
        except DecompositionMismatch as exc:
            return {"j": j, "identity": "F^k_j = (f^k_j, +-j f^k_(j-1))", "message": str(exc),
                    "element": F.to_json()}
    return None


def check_spinor_appell(k, r):
    def items():
        for j, F in enumerate(spinor.monogenic_basis(k, r)):
            expected = spinor.monogenic_element(k - 1, j - 1, r) * j
            if j in (0, 2 * k + 1):
                expected = expected * 0
            yield {"j": j}, spinor.appell_derivative(F) - expected
    return _first_nonzero(items(), "dF^k_j/dx3 = j F^(k-1)_(j-1)")


def check_spinor_recurrence(k, r):
    regenerated = spinor.regenerate_next_degree(spinor.monogenic_basis(k, r), k)
    target = spinor.monogenic_basis(k + 1, r)
    if len(regenerated) != len(target):
        return {"identity": "recurrence size", "got": len(regenerated), "expected": len(target)}
    return _first_nonzero((({"j": j}, a - b) for j, (a, b) in enumerate(zip(regenerated, target))),
                          "F^(k+1)_(j+1) = x3 F^k_j - j z F^k_(j-1) + omega^- F^(k+1)_j")


def check_spinor_weight(k, r):
    return _first_nonzero(
        (({"j": j}, spinor.op_Htilde(F) - F * Fraction(2 * k + 1 - 2 * j, 2))
         for j, F in enumerate(spinor.monogenic_basis(k, r))),
        "H~ F^k_j = (k + 1/2 - j) F^k_j")


def check_spinor_size(k, r):
    basis = spinor.monogenic_basis(k, r)
    zeros = [j for j, F in enumerate(basis) if F.is_zero()]
    if len(basis) != 2 * k + 2 or zeros:
        return {"identity": "2k+2 nonzero elements", "size": len(basis), "zero_indices": zeros}
    return _first_nonzero([({"j": 2 * k + 2}, spinor.op_Xtilde_minus(basis[-1]))],
                          "(X~-)^(2k+2) F^k_0 = 0")


# ----- quaternion -----------------------------------------------------------

def check_quat_monogenic(k, _r=None):
    def items():
        for j in range(k + 1):
            for col, h in enumerate(quaternion.build_g(k, j).columns()):
                yield {"j": j, "column": col}, quaternion.cr_operator_D(h)
    return _first_nonzero(items(), "D h = 0 for both columns of g^k_j")


def check_quat_appell(k, _r=None):
    def items():
        for j in range(k + 1):
            d = quaternion.appell_derivative_g(quaternion.build_g(k, j))
            if j == 0:
                yield {"j": j}, d
            else:
                yield {"j": j}, d - quaternion.build_g(k - 1, j - 1).scale(k)
    return _first_nonzero(items(), "dg^k_j/dy0 = k g^(k-1)_(j-1)")


def _g_primitive_power(k: int) -> QuatPoly:
    y1, y2 = MultiPoly.var("y1"), MultiPoly.var("y2")
    zero = MultiPoly.zero("y")
    return quaternion.quat_power(QuatPoly(y1, zero, zero, -y2), k)


def check_quat_primitive(k, _r=None):
    return _first_nonzero([({"j": 0}, quaternion.build_g(k, 0) - _g_primitive_power(k))],
                          "g^k_0 = (y1 - i3 y2)^k")


def check_quat_weight(k, _r=None):
    def items():
        for j in range(k + 1):
            first, second = quaternion.weight_check_g(quaternion.build_g(k, j),
                                                      Fraction(2 * k + 1 - 2 * j, 2))
            yield {"j": j, "column": 0}, first
            yield {"j": j, "column": 1}, second
    return _first_nonzero(items(), "H h = +-(k + 1/2 - j) h on the columns of g^k_j")


# ----- orthogonality --------------------------------------------------------

def _gram_failure(G, product: str):
    n = len(G)
    for m in range(n):
        if inner.entry_is_zero(G[m][m]):
            return {"identity": f"diagonal entry nonzero ({product})", "index": [m, m]}
        for l in range(n):
            if m != l and not inner.entry_is_zero(G[m][l]):
                return {"identity": f"off-diagonal entry zero ({product})", "index": [m, l],
                        "value": str(G[m][l])}
    return None


def _family(name: str, k: int, r):
    if name == "harmonic":
        return [e.poly for e in sl2.harmonic_basis(k)]
    if name == "spinor":
        return spinor.monogenic_basis(k, r)
    if name == "h-columns":
        return [quaternion.build_h(k, j) for j in range(2 * k + 2)]
    if name == "g-columns":
        cols = []
        for j in range(k + 1):
            cols.extend(quaternion.build_g(k, j).columns())
        return cols
    if name == "quaternion":
        return quaternion.quaternion_basis(k)
    raise KeyError(name)


def _gram_check(family: str, product: str):
    def check(k, r=None):
        return _gram_failure(inner.gram_matrix(_family(family, k, r), product), product)
    return check


def check_quat_inner_offdiagonal(k, _r=None):
    G = inner.gram_matrix(quaternion.quaternion_basis(k), inner.L2BALL)
    for m in range(len(G)):
        for l in range(len(G)):
            if m != l and not G[m][l].is_zero():
                return {"identity": "(g^k_j, g^k_l)_H = 0", "index": [m, l], "value": str(G[m][l])}
    return None


# ----- closed forms ---------------------------------------------------------

def _closed_form_check(family_of):
    def check(k, r=None, seed: int = 0):
        family = family_of(r)
        points = closed_forms.sample_points(CLOSED_FORM_POINTS, seed)
        report = closed_forms.cross_validate(family, k, points, CLOSED_FORM_TOLERANCE)
        if report.passed:
            return None
        worst = int(np.argmax(report.errors))
        return {"identity": "construction = closed form", "j": worst,
                "max_rel_error": report.max_rel_error, "tolerance": report.tolerance}
    return check


def _bonnet(k_max: int) -> list[list[Fraction]]:
    polys = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for n in range(1, k_max):
        a = [Fraction(0)] + [c * (2 * n + 1) for c in polys[n]]
        b = [c * n for c in polys[n - 1]] + [Fraction(0)] * 2
        polys.append([(u - v) / (n + 1) for u, v in zip(a, b)])
    out = []
    for p in polys[: k_max + 1]:
        p = list(p)
        while p and not p[-1]:
            p.pop()
        out.append(p)
    return out


def check_legendre(k, _r=None):
    if list(closed_forms.assoc_legendre(k, 0).poly_part) != _bonnet(max(k, 1))[k]:
        return {"identity": "P^0_k = Bonnet-recurrence Legendre polynomial", "k": k}
    for l in (k + 1, -k - 1):
        if not closed_forms.assoc_legendre(k, l).is_zero():
            return {"identity": "P^(+-(k+1))_k = 0", "order": l}
    return None


# ----- operator identities on random inputs ---------------------------------

def _random_spinor(rng, realization) -> SpinorPoly:
    return SpinorPoly(random_poly(rng, rng.randint(0, OPERATOR_MAX_DEGREE)),
                      random_poly(rng, rng.randint(0, OPERATOR_MAX_DEGREE)), realization)


def _commutator(a, b):
    return lambda p: a(b(p)) - b(a(p))


def check_sl2_relations(_k=None, _r=None, seed: int = 0):
    rng = random.Random(seed)
    for trial in range(OPERATOR_TRIALS):
        p = random_poly(rng, OPERATOR_MAX_DEGREE)
        identities = [
            ("[X+,X-] = 2H", _commutator(sl2.op_Xplus, sl2.op_Xminus)(p) - sl2.op_H(p).scale(2)),
            ("[H,X+] = X+", _commutator(sl2.op_H, sl2.op_Xplus)(p) - sl2.op_Xplus(p)),
            ("[H,X-] = -X-", _commutator(sl2.op_H, sl2.op_Xminus)(p) + sl2.op_Xminus(p)),
            ("[h12,h23] = h31", _commutator(sl2.h12, sl2.h23)(p) - sl2.h31(p)),
            ("[h23,h31] = h12", _commutator(sl2.h23, sl2.h31)(p) - sl2.h12(p)),
            ("[h31,h12] = h23", _commutator(sl2.h31, sl2.h12)(p) - sl2.h23(p)),
        ]
        for label, residual in identities:
            if residual:
                return _residual(label, residual, trial=trial, input=p.to_json())
    return None


def check_omega_relations(_k=None, _r=None, seed: int = 0):
    rng = random.Random(seed + 1)
    for trial in range(OPERATOR_TRIALS):
        s = _random_spinor(rng, list(Realization)[trial % 2])
        om = spinor.omega_minus
        xm = spinor.op_Xminus_spinor
        identities = [
            ("(omega^-)^2 = 0", om(om(s))),
            ("[X-, omega^-] = 0", xm(om(s)) - om(xm(s))),
        ]
        for label, residual in identities:
            if not residual.is_zero():
                return _residual(label, residual, trial=trial, input=s.to_json())
    return None


def check_xtilde_expansion(_k=None, _r=None, seed: int = 0, max_power: int = 6):
    rng = random.Random(seed + 2)
    for trial in range(OPERATOR_TRIALS):
        s = _random_spinor(rng, list(Realization)[trial % 2])
        lowered = s
        xm_powers = [s]
        for _ in range(max_power):
            xm_powers.append(spinor.op_Xminus_spinor(xm_powers[-1]))
        om_s = spinor.omega_minus(s)
        xm_om = [om_s]
        for _ in range(max_power):
            xm_om.append(spinor.op_Xminus_spinor(xm_om[-1]))
        for j in range(1, max_power + 1):
            lowered = spinor.op_Xtilde_minus(lowered)
            residual = lowered - (xm_powers[j] + xm_om[j - 1] * j)
            if not residual.is_zero():
                return _residual("(X~-)^j = (X-)^j + j (X-)^(j-1) omega^-", residual,
                                 trial=trial, j=j, input=s.to_json())
    return None


def check_appell_commutator(_k=None, _r=None, seed: int = 0, max_power: int = 6):
    rng = random.Random(seed + 3)
    d3 = lambda s: s.diff("x3")  # noqa: E731
    dzb = lambda s: s.map(sl2.d_zbar)  # noqa: E731
    for trial in range(OPERATOR_TRIALS):
        s = _random_spinor(rng, list(Realization)[trial % 2])
        powers = [s]
        powers_d3 = [d3(s)]
        for _ in range(max_power):
            powers.append(spinor.op_Xtilde_minus(powers[-1]))
            powers_d3.append(spinor.op_Xtilde_minus(powers_d3[-1]))
        dzb_s = dzb(s)
        lowered_dzb = [dzb_s]
        for _ in range(max_power):
            lowered_dzb.append(spinor.op_Xtilde_minus(lowered_dzb[-1]))
        for j in range(1, max_power + 1):
            residual = d3(powers[j]) - powers_d3[j] - lowered_dzb[j - 1] * (2 * j)
            if not residual.is_zero():
                return _residual("[d/dx3, (X~-)^j] = 2j (X~-)^(j-1) d/dz_bar", residual,
                                 trial=trial, j=j, input=s.to_json())
    return None


# ----- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    family: str
    func: Callable
    tags: frozenset = field(default_factory=frozenset)
    per_realization: bool = False
    per_degree: bool = True
    max_degree: int | None = None
    degree_offset: int = 0  # recurrence checks k -> k+1, so stop one early
    seeded: bool = False


def _c(name, family, func, tags=(), **kw) -> Check:
    return Check(name, family, func, frozenset(tags) | {family.rstrip("+-")}, **kw)


CHECKS: tuple[Check, ...] = (
    _c("harmonic-laplacian", "harmonic", check_harmonic_laplacian),
    _c("harmonic-weight", "harmonic", check_harmonic_weight, ["weight"]),
    _c("harmonic-extremes", "harmonic", check_harmonic_extremes),
    _c("harmonic-size", "harmonic", check_harmonic_size),
    _c("spinor-monogenic", "spinor", check_spinor_monogenic, ["monogenic"], per_realization=True),
    _c("spinor-decomposition", "spinor", check_spinor_decomposition, per_realization=True),
    _c("spinor-appell", "spinor", check_spinor_appell, ["appell"], per_realization=True),
    _c("spinor-recurrence", "spinor", check_spinor_recurrence, ["recurrence"],
       per_realization=True, degree_offset=1),
    _c("spinor-weight", "spinor", check_spinor_weight, ["weight"], per_realization=True),
    _c("spinor-size", "spinor", check_spinor_size, per_realization=True),
    _c("quat-monogenic", "quaternion", check_quat_monogenic, ["monogenic"]),
    _c("quat-appell", "quaternion", check_quat_appell, ["appell"]),
    _c("quat-primitive", "quaternion", check_quat_primitive),
    _c("quat-weight", "quaternion", check_quat_weight, ["weight"]),
    _c("gram-fischer-harmonic", "harmonic", _gram_check("harmonic", inner.FISCHER), ["orthogonality"]),
    _c("gram-fischer-spinor", "spinor", _gram_check("spinor", inner.FISCHER), ["orthogonality"],
       per_realization=True),
    _c("gram-fischer-h-columns", "quaternion", _gram_check("h-columns", inner.FISCHER),
       ["orthogonality"]),
    _c("gram-fischer-g-columns", "quaternion", _gram_check("g-columns", inner.FISCHER),
       ["orthogonality"]),
    _c("gram-l2-harmonic", "harmonic", _gram_check("harmonic", inner.L2BALL), ["orthogonality"],
       max_degree=L2_MAX_DEGREE),
    _c("gram-l2-spinor", "spinor", _gram_check("spinor", inner.L2BALL), ["orthogonality"],
       per_realization=True, max_degree=L2_MAX_DEGREE),
    _c("quat-inner-l2", "quaternion", check_quat_inner_offdiagonal, ["orthogonality"],
       max_degree=L2_MAX_DEGREE),
    _c("closed-harmonic", "harmonic", _closed_form_check(lambda r: "harmonic"), ["closed-forms"],
       seeded=True),
    _c("closed-spinor", "spinor", _closed_form_check(lambda r: "spinor+" if r is Realization.PLUS
                                                      else "spinor-"),
       ["closed-forms"], per_realization=True, seeded=True),
    _c("closed-quaternion", "quaternion", _closed_form_check(lambda r: "quaternion"),
       ["closed-forms"], seeded=True),
    _c("legendre", "legendre", check_legendre, ["closed-forms"]),
    _c("operators-sl2", "operators", check_sl2_relations, per_degree=False),
    _c("operators-omega", "operators", check_omega_relations, per_degree=False),
    _c("operators-xtilde-expansion", "operators", check_xtilde_expansion, per_degree=False),
    _c("operators-appell-commutator", "operators", check_appell_commutator, ["commutator"],
       per_degree=False),
)

CHECK_INDEX = {c.name: n for n, c in enumerate(CHECKS)}


def select_checks(selectors: Iterable[str] | None) -> list[Check]:
    """Checks whose name or tag matches any selector; all checks when empty."""
    selectors = [s for s in (selectors or []) if s]
    if not selectors:
        return list(CHECKS)
    known = set(CHECK_INDEX) | {t for c in CHECKS for t in c.tags}
    unknown = [s for s in selectors if s not in known]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; known names and tags: {sorted(known)}")
    return [c for c in CHECKS if c.name in selectors or c.tags & set(selectors)]


def plan(checks: Iterable[Check], max_degree: int) -> list[tuple[str, int | None, str | None]]:
    tasks = []
    for c in checks:
        realizations = [r.value for r in Realization] if c.per_realization else [None]
        if not c.per_degree:
            tasks.append((c.name, None, None))
            continue
        top = max_degree - c.degree_offset
        if c.max_degree is not None:
            top = min(top, c.max_degree)
        for r in realizations:
            for k in range(0, top + 1):
                tasks.append((c.name, k, r))
    return tasks


def run_task(task, seed: int = 0, mutation: str | None = None) -> VerificationReport:
    name, k, r = task
    check = CHECKS[CHECK_INDEX[name]]
    family = check.family if r is None else f"{check.family}{r[-1]}"
    start = time.perf_counter()
    with inject(mutation):
        realization = Realization.parse(r) if r else None
        if check.per_degree:
            kwargs = {"seed": seed} if check.seeded else {}
            result = check.func(k, realization, **kwargs)
        else:
            result = check.func(seed=seed)
    elapsed = time.perf_counter() - start
    degrees = (k, k + check.degree_offset) if k is not None else None
    return VerificationReport(name, family, degrees, "fail" if result else "pass", result, elapsed)


def _sort_key(report: VerificationReport):
    deg = report.degrees[0] if report.degrees else -1
    return (CHECK_INDEX[report.check], report.family, deg)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MONOGENICA_THREADS", "1")))
    except ValueError:
        return 1


def run(max_degree: int, selectors: Iterable[str] | None = None, seed: int = 0,
        mutation: str | None = None, workers: int | None = None) -> list[VerificationReport]:
    """Run the selected checks for degrees 0..max_degree, sorted by check then degree."""
    tasks = plan(select_checks(selectors), max_degree)
    workers = workers or worker_count()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_task, tasks, [seed] * len(tasks), [mutation] * len(tasks)))
    else:
        reports = [run_task(t, seed, mutation) for t in tasks]
    return sorted(reports, key=_sort_key)
