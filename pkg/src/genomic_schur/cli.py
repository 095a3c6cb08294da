"""Command line front end.

Exit codes: 0 success / verified, 1 mathematical counterexample, 2 usage error.
"""
import argparse
import json
import os
import sys

from .combinatorics import l_lambda, par_by_family, parse_parts, two_row, valid_degrees
from .genome import equivalence_classes, linear_extension, sweep, verify_theorem
from .qsym import genomic_component, schur_via_syt
from .tableaux import enumerate_iglt, enumerate_syt

MAX_N = 64
JOBS_ENV = "GENOMIC_SCHUR_JOBS"


class UsageError(Exception):
    pass


def _shape(text):
    try:
        shape = parse_parts(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not shape:
        raise UsageError("shape must be nonempty")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise UsageError(f"shape {text!r} is not weakly decreasing")
    if sum(shape) > MAX_N:
        raise UsageError(f"shapes are limited to {MAX_N} boxes")
    return shape


def _two_row(text):
    try:
        return two_row(_shape(text))
    except ValueError as exc:
        raise UsageError(str(exc))


def _degree(lam, m):
    if not l_lambda(lam) <= m <= lam.n:
        raise UsageError(
            f"m={m} outside [{l_lambda(lam)}, {lam.n}] for shape {','.join(map(str, lam))}")
    return m


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate_syt(args):
    tabs = enumerate_syt(_shape(args.shape))
    _emit(args, [str(t) for t in tabs], map(str, tabs))
    return 0


def cmd_enumerate_iglt(args):
    lam = _two_row(args.shape)
    if args.max is None:
        raise UsageError("--max is required")
    if not 1 <= args.max:
        raise UsageError("--max must be positive")
    tabs = enumerate_iglt(lam, args.max)
    _emit(args, [str(t) for t in tabs], map(str, tabs))
    return 0


def _degrees(args, lam):
    if args.degree is None:
        return list(valid_degrees(lam))
    return [_degree(lam, args.degree)]


def cmd_expand(args):
    lam = _two_row(args.shape)
    payload, lines = [], []
    for m in _degrees(args, lam):
        comp = genomic_component(lam, m)
        par = sorted(par_by_family(lam, m).values())
        entry = {"m": m, "genomic": comp.to_json(),
                 "par": [list(mu) for mu in par]}
        lines.append(f"degree {m}: {comp}")
        if args.schur:
            rhs = sum((schur_via_syt(mu) for mu in par), comp - comp)
            entry["schur"] = rhs.to_json()
            names = " + ".join("s(" + ",".join(map(str, mu)) + ")" for mu in par)
            lines.append(f"  = {names or '0'} = {rhs}")
        payload.append(entry)
    _emit(args, {"lambda": list(lam), "components": payload}, lines)
    return 0


def cmd_classes(args):
    lam = _two_row(args.shape)
    if args.max is None:
        raise UsageError("--max is required")
    m = _degree(lam, args.max)
    classes = equivalence_classes(lam, m)
    payload, lines = [], []
    for x in (1, 2):
        fam = [E for E in classes if E.family == x]
        if not fam:
            continue
        ordered = linear_extension(fam)
        payload.append({"x": x, "classes": [E.to_json() for E in ordered]})
        lines.append(f"family {x}:")
        for j, E in enumerate(ordered, 1):
            lines.append(f"  E{j}: " + ", ".join(map(str, E.members)))
    _emit(args, {"lambda": list(lam), "m": m, "families": payload}, lines)
    return 0


def _report_lines(r):
    head = f"lambda={','.join(map(str, r.lam))} m={r.m}: " + (
        "verified" if r.verified else "FAILED")
    lines = [head]
    for f in r.families:
        lines.append(
            f"  family {f.x} shape {','.join(map(str, f.shape))}: {len(f.classes)} classes,"
            f" closure={f.closure_ok} quotient_iso={f.quotient_iso_ok} c1={f.c1_ok}")
        if f.extensions is not None:
            lines.append(f"    printed-order extensions passing: "
                         f"{f.extensions['passed']}/{f.extensions['total']}")
    for w in r.failures:
        lines.append(f"  counterexample: {w.check} family={w.family} stage={w.stage}"
                     f" pi_{w.generator} on {w.tableau}")
    return lines


def cmd_verify(args):
    if args.nmax is not None:
        if args.shape is not None:
            raise UsageError("--nmax cannot be combined with --shape")
        if not 2 <= args.nmax <= MAX_N:
            raise UsageError(f"--nmax must lie in [2, {MAX_N}]")
        reports = sweep(args.nmax, jobs=args.jobs, all_extensions=args.all_extensions)
        good = sum(r.verified for r in reports)
        summary = {"n_max": args.nmax, "cases": len(reports), "verified": good,
                   "failed": len(reports) - good}
        lines = [line for r in reports if not r.verified for line in _report_lines(r)]
        lines.append(f"{good}/{len(reports)} cases verified for n <= {args.nmax}")
        _emit(args, {"summary": summary, "reports": [r.to_json() for r in reports]}, lines)
        return 0 if good == len(reports) else 1
    if args.shape is None or args.max is None:
        raise UsageError("verify needs --shape and --max, or --nmax")
    lam = _two_row(args.shape)
    report = verify_theorem(lam, _degree(lam, args.max), all_extensions=args.all_extensions)
    _emit(args, report.to_json(), _report_lines(report))
    return 0 if report.verified else 1


def _default_jobs():
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genomic-schur",
        description="Genomic Schur functions, 0-Hecke modules and the genome filtration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("enumerate-syt", cmd_enumerate_syt, "list standard Young tableaux")
    p.add_argument("--shape", required=True)

    p = add("enumerate-iglt", cmd_enumerate_iglt, "list increasing gapless tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--max", type=int)

    p = add("expand", cmd_expand, "fundamental expansion of a genomic Schur function")
    p.add_argument("--shape", required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--schur", action="store_true", help="also print the Schur side")

    p = add("classes", cmd_classes, "genome equivalence classes, ordered per family")
    p.add_argument("--shape", required=True)
    p.add_argument("--max", type=int)

    p = add("verify", cmd_verify, "check the genome filtration")
    p.add_argument("--shape")
    p.add_argument("--max", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--all-extensions", action="store_true",
                   help="also try every linear extension of the bottom-column order")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
