"""Command-line front end.

Subcommands: basis, verify, eval, gram, bench.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time

import numpy as np

from . import closed_forms, inner, quaternion, sl2, spinor, verify
from .errors import MonogenicaError
from .mutations import MUTATIONS

FAMILIES = ("harmonic", "spinor", "quaternion")
DEGREE_GUARD = 20


class UsageError(Exception):
    pass


def _guard(value: int, flag: str, force: bool):
    if value < 0:
        raise UsageError(f"{flag} must be non-negative")
    if value > DEGREE_GUARD and not force:
        raise UsageError(f"{flag} {value} exceeds {DEGREE_GUARD}; pass --force to proceed")


def _family_key(args) -> str:
    if args.family == "spinor":
        if not args.realization:
            raise UsageError("--realization S4+|S4- is required for the spinor family")
        return "spinor+" if spinor.Realization.parse(args.realization) is spinor.Realization.PLUS \
            else "spinor-"
    return args.family


def _basis(family: str, k: int, realization=None) -> list:
    if family == "harmonic":
        return [e.poly for e in sl2.harmonic_basis(k)]
    if family == "spinor":
        return spinor.monogenic_basis(k, realization)
    if family == "quaternion":
        return quaternion.quaternion_basis(k)
    raise UsageError(f"unknown family {family!r}")


def _out(path):
    if path in (None, "-"):
        return sys.stdout
    try:
        return open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


# ----- basis ------------------------------------------------------------------

def cmd_basis(args) -> int:
    _guard(args.degree, "--degree", args.force)
    if args.family == "spinor":
        _family_key(args)
    elements = _basis(args.family, args.degree, args.realization)
    out = _out(args.out)
    if args.format == "json":
        doc = {"family": args.family, "degree": args.degree,
               "realization": spinor.Realization.parse(args.realization).value
               if args.family == "spinor" else None,
               "elements": [e.to_json() for e in elements]}
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        width = len(str(len(elements) - 1))
        for j, e in enumerate(elements):
            out.write(f"j={j:>{width}}  {e}\n")
    if out is not sys.stdout:
        out.close()
    return 0


# ----- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    _guard(args.max_degree, "--max-degree", args.force)
    selectors = [s.strip() for s in (args.checks or "").split(",") if s.strip()]
    try:
        verify.select_checks(selectors)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    start = time.perf_counter()
    reports = verify.run(args.max_degree, selectors, seed=args.seed, mutation=args.inject_mutation)
    for rep in reports:
        sys.stdout.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed "
          f"in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return 1 if failed else 0


# ----- eval -------------------------------------------------------------------

def read_points(path: str) -> closed_forms.SphericalPoint:
    try:
        handle = open(path, newline="")
    except OSError as exc:
        raise UsageError(f"cannot read points file {path}: {exc}") from exc
    with handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            rows = []
        elif [f.strip() for f in reader.fieldnames] != ["r", "theta", "phi"]:
            raise UsageError(f"points file header must be r,theta,phi, got {reader.fieldnames}")
        else:
            rows = list(reader)
    try:
        values = np.array([[float(row[c]) for c in ("r", "theta", "phi")] for row in rows],
                          dtype=float).reshape(-1, 3)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse points file {path}: {exc}") from exc
    return closed_forms.SphericalPoint(values[:, 0], values[:, 1], values[:, 2])


def _component_names(family: str) -> list[str]:
    return {"harmonic": ["f"], "spinor+": ["plus", "minus"], "spinor-": ["plus", "minus"],
            "quaternion": ["e0", "e1", "e2", "e3"]}[family]


def cmd_eval(args) -> int:
    _guard(args.degree, "--degree", args.force)
    family = _family_key(args)
    top = {"harmonic": 2 * args.degree, "quaternion": args.degree}.get(family, 2 * args.degree + 1)
    if not 0 <= args.index <= top:
        raise UsageError(f"--index {args.index} outside [0, {top}] for {args.family}")
    points = read_points(args.points)
    names = _component_names(family)
    complex_valued = family != "quaternion"
    header = ["r", "theta", "phi"]
    for n in names:
        if complex_valued:
            header += [f"{n}_constructive_re", f"{n}_constructive_im",
                       f"{n}_closed_re", f"{n}_closed_im", f"{n}_absdiff"]
        else:
            header += [f"{n}_constructive", f"{n}_closed", f"{n}_absdiff"]
    out = _out(args.out)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    if len(points.r):
        got = [np.broadcast_to(v, points.r.shape) for v in
               closed_forms.constructive_values(family, args.degree, args.index, points)]
        want = [np.broadcast_to(v, points.r.shape) for v in
                closed_forms.closed_form_values(family, args.degree, args.index, points)]
        for i in range(len(points.r)):
            row = [repr(float(points.r[i])), repr(float(points.theta[i])), repr(float(points.phi[i]))]
            for a, b in zip(got, want):
                a_i, b_i = complex(a[i]), complex(b[i])
                if complex_valued:
                    row += [repr(a_i.real), repr(a_i.imag), repr(b_i.real), repr(b_i.imag)]
                else:
                    row += [repr(a_i.real), repr(b_i.real)]
                row.append(repr(abs(a_i - b_i)))
            writer.writerow(row)
    if out is not sys.stdout:
        out.close()
    return 0


# ----- gram -------------------------------------------------------------------

def cmd_gram(args) -> int:
    _guard(args.degree, "--degree", args.force)
    if args.family == "spinor":
        _family_key(args)
    G = inner.gram_matrix(_basis(args.family, args.degree, args.realization), args.product)
    out = _out(args.out)
    out.write(inner.gram_to_json(G) + "\n" if args.format == "json" else inner.gram_to_csv(G))
    if out is not sys.stdout:
        out.close()
    zero = inner.offdiagonal_zero(G)
    print(f"off-diagonal entries exactly zero: {'yes' if zero else 'no'}", file=sys.stderr)
    return 0


# ----- bench ------------------------------------------------------------------

def cmd_bench(args) -> int:
    _guard(args.max_degree, "--max-degree", args.force)
    if args.points < 0:
        raise UsageError("--points must be non-negative")
    spinor.clear_caches()
    quaternion.clear_caches()
    sl2._harmonic_polys.cache_clear()
    construction = []
    for k in range(args.max_degree + 1):
        start = time.perf_counter()
        harmonic = [e.poly for e in sl2.harmonic_basis(k)]
        spinors = spinor.monogenic_basis(k, "S4+") + spinor.monogenic_basis(k, "S4-")
        quats = quaternion.quaternion_basis(k)
        elapsed = time.perf_counter() - start
        digest = hashlib.sha256(json.dumps(
            [e.to_json() for e in harmonic + spinors + quats], sort_keys=True).encode()).hexdigest()
        construction.append({"k": k, "seconds": elapsed, "workload_hash": digest[:16]})
    pts = closed_forms.sample_points(args.points, args.seed) if args.points else \
        closed_forms.SphericalPoint(np.zeros(0), np.zeros(0), np.zeros(0))
    ys = pts.to_y()
    start = time.perf_counter()
    checksum = 0.0
    n_elements = 0
    for k in range(args.max_degree + 1):
        for g in quaternion.quaternion_basis(k):
            for c in g.components:
                checksum += float(np.sum(np.real(c.eval_float(ys))))
            n_elements += 1
    elapsed = time.perf_counter() - start
    point_hash = hashlib.sha256(np.stack([pts.r, pts.theta, pts.phi]).tobytes()).hexdigest()
    report = {"max_degree": args.max_degree, "points": args.points, "seed": args.seed,
              "construction": construction,
              "evaluation": {"elements": n_elements, "seconds": elapsed,
                             "workload_hash": point_hash[:16]}}
    sys.stdout.write(json.dumps(report, indent=1) + "\n")
    return 0


# ----- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monogenica", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--force", action="store_true", help=f"allow degrees above {DEGREE_GUARD}")

    p = sub.add_parser("basis", help="emit a canonical basis")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--realization", choices=["S4+", "S4-"])
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="run the exact verification suites")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--checks", help="comma-separated check names or tags")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-mutation", choices=MUTATIONS,
                   help="corrupt one convention to demonstrate the suite detects it")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate construction and closed form at points")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--realization", choices=["S4+", "S4-"])
    p.add_argument("--points", required=True, help="CSV file with header r,theta,phi")
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gram", help="exact Gram matrix of a basis")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--product", choices=inner.PRODUCTS, required=True)
    p.add_argument("--realization", choices=["S4+", "S4-"])
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("bench", help="time construction and float evaluation")
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--points", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MonogenicaError) as exc:
        print(f"monogenica {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
