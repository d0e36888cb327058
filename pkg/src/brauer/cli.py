"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .decomposition import (
    Context,
    full_decomposition,
    iso_check,
    representation_check,
)
from .diagrams import algebra_generators, diagram_multiply, enumerate_diagrams, format_diagram, parse_diagram
from .errors import BrauerError
from .scalars import FORM_KINDS, SKEW, SYMMETRIC, FieldSpec, check_form, parse_scalar
from .tensor_action import DENSE_CAP, FormSpec, act, format_vector, parse_vector
from .weights import (
    dim_N,
    dominant_representative,
    fiber,
    hyperoctahedral_generators,
    image_weights,
    parse_weight,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _form(args) -> FormSpec:
    return FormSpec(args.form, args.n, FieldSpec(args.char))


# --- subcommands ---------------------------------------------------------

def cmd_diagrams(args) -> int:
    names = [format_diagram(d) for d in enumerate_diagrams(args.r)]
    if args.output == "json":
        print(json.dumps(names))
    else:
        print("\n".join(names))
    return EXIT_OK


def cmd_mul(args) -> int:
    form = _form(args)
    d1 = parse_diagram(args.d1, args.r)
    d2 = parse_diagram(args.d2, args.r)
    prod = diagram_multiply(d1, d2)
    scalar = form.delta**prod.cycles
    if args.output == "json":
        print(json.dumps({"cycles": prod.cycles, "scalar": str(scalar),
                          "diagram": format_diagram(prod.diagram)}))
    else:
        print(f"{scalar} * {format_diagram(prod.diagram)}")
    return EXIT_OK


def cmd_act(args) -> int:
    form = _form(args)
    vec = parse_vector(args.vector, form.field)
    for t in vec:
        if len(t) != args.r:
            raise BrauerError(f"tensor index {t} does not have r={args.r} entries")
    element = []
    for term in args.term:
        diagram, _, coeff = term.partition(":")
        c = parse_scalar(coeff, form.field) if coeff else form.field.one()
        element.append((parse_diagram(diagram, args.r), c))
    out = act(vec, element, form)
    if args.output == "json":
        print(json.dumps({",".join(map(str, t)): str(c) for t, c in sorted(out.items())}))
    else:
        print(format_vector(out))
    return EXIT_OK


def cmd_weights(args) -> int:
    rows = []
    for xi in image_weights(args.n, args.r):
        rows.append((xi, dominant_representative(xi), len(fiber(xi, args.n, args.r)), dim_N(xi, args.n, args.r)))
    if args.output == "json":
        print(json.dumps([
            {"xi": list(x.entries), "parity": x.parity, "dominant": list(d.entries),
             "fiber_size": f, "dim": dim} for x, d, f, dim in rows
        ], indent=2))
    else:
        print(_table(["xi", "dominant", "fiber", "dim"],
                     [(x, ",".join(map(str, d.entries)), f, dim) for x, d, f, dim in rows]))
    return EXIT_OK


def cmd_fibers(args) -> int:
    xis = [parse_weight(args.xi)] if args.xi else image_weights(args.n, args.r)
    result = [(xi, fiber(xi, args.n, args.r)) for xi in xis]
    if args.output == "json":
        print(json.dumps([{"xi": list(xi.entries), "parity": xi.parity,
                           "fiber": [list(lam.parts) for lam in lams]} for xi, lams in result], indent=2))
    else:
        for xi, lams in result:
            print(f"{xi}: " + " ".join(f"({lam})" for lam in lams))
    return EXIT_OK


def cmd_decompose(args) -> int:
    ctx = Context(args.n, args.r, args.form)
    report = full_decomposition(ctx, FieldSpec(args.char), all_diagrams=args.all_diagrams)
    if args.output == "json":
        print(report.to_json())
    else:
        rows = [(s.xi, s.dim, s.fiber_size, ",".join(map(str, s.dominant.entries)),
                 "yes" if s.verified else "NO") for s in report.summands]
        print(_table(["xi", "dim", "fiber", "dominant", "verified"], rows))
        print(f"total {report.total_dim} (n^r = {args.n ** args.r})")
        for s in report.summands:
            if s.certificate is not None:
                print(f"failure at {s.xi}: {s.certificate}", file=sys.stderr)
    return EXIT_OK if report.verified else EXIT_FAIL


def verify_cell(n: int, r: int, form: str, char: int) -> dict:
    """Decomposition, orbit isomorphisms and the representation property for one cell."""
    cell = {"n": n, "r": r, "form": form, "char": char}
    try:
        field = FieldSpec(char)
        check_form(form, n, field)
    except BrauerError as exc:
        cell.update(status="excluded", reason=str(exc))
        return cell
    if n**r > DENSE_CAP:
        cell.update(status="skipped", reason=f"n^r = {n ** r} exceeds the cap {DENSE_CAP}")
        return cell
    ctx = Context(n, r, form)
    spec = FormSpec(form, n, field)
    report = full_decomposition(ctx, field)
    iso_ok = all(iso_check(xi, w, ctx, field)
                 for xi in image_weights(n, r) for w in hyperoctahedral_generators(n // 2))
    rep_ok = representation_check(spec, r, left=algebra_generators(r)) is None
    checks = {"decomposition": report.verified, "isomorphisms": iso_ok, "representation": rep_ok}
    cell.update(status="pass" if all(checks.values()) else "fail", checks=checks,
                summands=len(report.summands))
    return cell


def cmd_verify(args) -> int:
    jobs = [(n, r, f, c) for n in args.n for r in args.r for f in args.forms for c in args.chars]
    for f in args.forms:
        if f not in FORM_KINDS:
            raise BrauerError(f"unknown form {f!r}")
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            cells = list(pool.map(verify_cell, *zip(*jobs)))
    else:
        cells = [verify_cell(*job) for job in jobs]
    cells.sort(key=lambda c: (c["n"], c["r"], c["form"], c["char"]))
    failed = [c for c in cells if c["status"] == "fail"]
    if args.output == "json":
        print(json.dumps({"cells": cells, "passed": not failed}, indent=2))
    else:
        rows = []
        for c in cells:
            note = c.get("reason", "")
            if "checks" in c:
                note = " ".join(k for k, ok in c["checks"].items() if not ok) or ""
            rows.append((c["n"], c["r"], c["form"], c["char"], c["status"], note))
        print(_table(["n", "r", "form", "char", "status", "note"], rows))
        counts = {s: sum(1 for c in cells if c["status"] == s) for s in ("pass", "fail", "excluded", "skipped")}
        print(" ".join(f"{k}={v}" for k, v in counts.items()))
    return EXIT_FAIL if failed else EXIT_OK


# --- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", choices=("table", "json"), default="table")

    def add_form(p, n_required=True):
        p.add_argument("--n", type=int, required=n_required)
        p.add_argument("--form", choices=FORM_KINDS, default=SYMMETRIC)
        p.add_argument("--char", type=int, default=0)

    p = sub.add_parser("diagrams", help="list all r-diagrams")
    p.add_argument("--r", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_diagrams)

    p = sub.add_parser("mul", help="multiply two diagrams")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d1", required=True)
    p.add_argument("--d2", required=True)
    add_form(p)
    add_output(p)
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("act", help="act on a tensor by an algebra element")
    p.add_argument("--r", type=int, required=True)
    add_form(p)
    p.add_argument("--vector", required=True, help='terms "i1,...,ir:coeff" separated by ";"')
    p.add_argument("--term", action="append", required=True, help="DIAGRAM[:COEFF], repeatable")
    add_output(p)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("weights", help="list orthogonal weights of tensor space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("fibers", help="list the compositions over each weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--xi", help='single weight, e.g. "1,-1"')
    add_output(p)
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("decompose", help="decompose tensor space and verify every summand")
    p.add_argument("--r", type=int, required=True)
    add_form(p)
    p.add_argument("--all-diagrams", action="store_true",
                   help="check against every diagram instead of the generators (r <= 3)")
    add_output(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="batch verification over a grid of cells")
    p.add_argument("--n", type=_int_list, default=[2, 3, 4, 5])
    p.add_argument("--r", type=_int_list, default=[1, 2, 3, 4])
    p.add_argument("--forms", type=_str_list, default=[SYMMETRIC, SKEW])
    p.add_argument("--chars", type=_int_list, default=[0, 2, 3])
    p.add_argument("--jobs", type=int, default=1)
    add_output(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrauerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
