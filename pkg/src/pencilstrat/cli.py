"""Command-line front end.

Exit codes: 0 relation holds / checks pass, 3 relation does not hold,
2 usage, parse or domain error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .closure import (
    bundle_closure_contains,
    coalesce,
    format_assignment,
    orbit_closure_contains,
    orbit_report,
    parse_assignment,
)
from .eigenvalue import parse_eigenvalue
from .exact import extract_weyr, pencil_rank
from .gaussian import GaussianRational
from .hierarchy import export_dot, export_json, hasse
from .realize import witness_order, witness_sequence
from .structure import parse, serialize, weyr_at
from .suites import SUITES, run_suite

EXIT_YES = 0
EXIT_USAGE = 2
EXIT_NO = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


def _read(arg: str) -> str:
    """Inline text, or the contents of a file if ``arg`` names one."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _structure(arg: str):
    return parse(_read(arg))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verdict(holds: bool) -> int:
    print(f"VERDICT: {'YES' if holds else 'NO'}")
    return EXIT_YES if holds else EXIT_NO


def cmd_check_orbit(args) -> int:
    L, M = _structure(args.L), _structure(args.M)
    holds = orbit_closure_contains(L, M)
    rep = orbit_report(L, M)
    word = {True: "holds", False: "fails"}
    print(f"h = {rep.h}")
    print(f"(i) right minimal indices: {word[rep.right_ok]}")
    print(f"(ii) left minimal indices: {word[rep.left_ok]}")
    if not rep.rank_ok:
        print("(iii) Jordan structure: fails (h < 0)")
    elif rep.failing:
        print(f"(iii) Jordan structure: fails at {', '.join(map(str, rep.failing))}")
    else:
        print("(iii) Jordan structure: holds")
    return _verdict(holds)


def cmd_check_bundle(args) -> int:
    L, M = _structure(args.L), _structure(args.M)
    holds, wit = bundle_closure_contains(L, M)
    if holds:
        print(f"witness: {format_assignment(wit)}")
    return _verdict(holds)


def cmd_coalesce(args) -> int:
    s = _structure(args.L)
    a = parse_assignment(_read(args.assignment))
    print(serialize(coalesce(s, a)))
    return EXIT_YES


def cmd_hierarchy(args) -> int:
    if min(args.m, args.n) > args.cap:
        raise UsageError(f"min(m, n) = {min(args.m, args.n)} exceeds the cap {args.cap} (raise it with --cap)")
    if args.m < 0 or args.n < 0:
        raise UsageError("sizes must be non-negative")
    g = hasse(args.m, args.n)
    if args.format == "json":
        text = export_json(g)
    elif args.format == "dot":
        text = export_dot(g)
    else:
        lines = [f"{nd.id}  [c_jor={nd.c_jor}]" for nd in g.nodes]
        lines += [f"{a} -> {b}" for a, b in g.edges]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    counts = f"nodes: {len(g.nodes)}, edges: {len(g.edges)}"
    print(counts, file=sys.stdout if args.out else sys.stderr)
    return EXIT_YES


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.suite, args.seed)
    print(res.summary())
    for f in res.failures:
        print(f"  {f}")
    print(f"VERDICT: {'PASS' if res.passed else 'FAIL'}")
    return EXIT_YES if res.passed else EXIT_VERIFY


def _group(text: str) -> list:
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    toks = [t.strip() for t in text.split(",") if t.strip()]
    if not toks:
        raise UsageError("empty group")
    return [parse_eigenvalue(t) for t in toks]


def cmd_witness(args) -> int:
    s = _structure(args.L)
    group = _group(args.group)
    target = parse_eigenvalue(args.target)
    if args.k < 1:
        raise UsageError("--k must be positive")
    Lk, limit = witness_sequence(s, group, target, args.k)
    target = GaussianRational.coerce(target)
    out = [f"# structure: {serialize(s)}", f"# k = {args.k}", "L_k:", Lk.to_text(), "limit:", limit.to_text()]
    out.append(f"rank L_k = {pencil_rank(Lk)}, rank limit = {pencil_rank(limit)}")
    for i, mu in enumerate(witness_order(s, group), start=1):
        at = target + GaussianRational(Fraction(i, args.k))
        out.append(f"W(L_k, {at}) = {extract_weyr(Lk, at, args.dmax)}  (from {mu}: {weyr_at(s, mu)})")
    out.append(f"W(limit, {target}) = {extract_weyr(limit, target, args.dmax)}")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pencilstrat", description="Orbit and bundle closures of matrix pencils.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("check-orbit", help="is M in the closure of the orbit of L?")
    q.add_argument("L")
    q.add_argument("M")
    q.set_defaults(func=cmd_check_orbit)

    q = sub.add_parser("check-bundle", help="is the bundle of M in the closure of the bundle of L?")
    q.add_argument("L")
    q.add_argument("M")
    q.set_defaults(func=cmd_check_bundle)

    q = sub.add_parser("coalesce", help="apply an assignment like '{0,2}->1; {1}->fresh'")
    q.add_argument("L")
    q.add_argument("assignment")
    q.set_defaults(func=cmd_coalesce)

    q = sub.add_parser("hierarchy", help="bundle hierarchy of m x n pencils")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    q.add_argument("--out")
    q.add_argument("--cap", type=int, default=3)
    q.set_defaults(func=cmd_hierarchy)

    q = sub.add_parser("verify", help=f"run a self-check suite ({', '.join(SUITES)})")
    q.add_argument("suite")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("witness", help="explicit pencils whose eigenvalues coalesce in the limit")
    q.add_argument("L")
    q.add_argument("group", help="eigenvalues to coalesce, e.g. '{3,2}'")
    q.add_argument("target")
    q.add_argument("--k", type=int, default=10)
    q.add_argument("--dmax", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_witness)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
