"""Command line interface: ``qrational <command> ...``.

Every command accepts ``--format text|json|latex`` (default taken from the
``QRAT_FORMAT`` environment variable, else ``text``).  Exit codes: 0 on
success, 1 for domain or capacity errors and failed verification suites,
2 for malformed input and usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .closures import build_graph, build_graph_prime, enumerate_closures, jones_closure_counts, jones_graph
from .contfrac import (
    CFRegular,
    Rational,
    evaluate_cf,
    expand_negative,
    expand_regular,
    neg_to_reg,
    parse_cf,
    parse_rational,
    reg_to_neg,
)
from .errors import CapacityError, DomainError, MalformedInputError
from .farey import farey_tree, quiddity_classify, quiddity_scalar, triangulation_build
from .jones import jones, to_signed_laurent
from .qpoly import LaurentPoly, format_poly, latex_poly
from .qrat import Mat2, continuant_neg, continuant_reg, generators, matrix_neg, matrix_reg, matrix_reg_normalized, qdeform
from .sequences import q_fibonacci, q_pell, rows_to_bfile, rows_to_csv, rows_to_json, triangle_rows
from .verify import SUITES, conjecture_report, run_suite

FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    """Bad command line usage detected after argparse has run."""


# -- input helpers ---------------------------------------------------------------------------


def _value(text: str) -> Rational:
    """A rational given as ``r/s`` or as a continued fraction."""
    if text.strip().startswith("["):
        return evaluate_cf(parse_cf(text))
    return parse_rational(text)


def _int_list(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("["):
        cf = parse_cf(t)
        return cf.a if isinstance(cf, CFRegular) else cf.c
    try:
        return tuple(int(x) for x in t.split(","))
    except ValueError as exc:
        raise MalformedInputError(f"expected a comma separated list of integers, got {text!r}") from exc


def _poly(p: LaurentPoly, fmt: str) -> str:
    return latex_poly(p) if fmt == "latex" else format_poly(p)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _reduced_note(text: str, x: Rational) -> str:
    return f" (reduced from {text.strip()})" if x.reduced else ""


def _mat_text(m: Mat2, fmt: str) -> str:
    if fmt == "latex":
        return (
            "\\begin{pmatrix}"
            f"{latex_poly(m.a)} & {latex_poly(m.b)} \\\\ {latex_poly(m.c)} & {latex_poly(m.d)}"
            "\\end{pmatrix}"
        )
    cells = [format_poly(e) for e in m.entries()]
    width = max(len(c) for c in cells)
    return f"[ {cells[0]:<{width}}  {cells[1]:<{width}} ]\n[ {cells[2]:<{width}}  {cells[3]:<{width}} ]"


# -- commands ----------------------------------------------------------------------------------


def cmd_qrat(args) -> int:
    x = _value(args.value)
    qr = qdeform(x)
    if args.format == "json":
        out = qr.to_json()
        out["reduced"] = bool(x.reduced)
        _emit(out)
    elif args.format == "latex":
        print(qr.latex())
    else:
        print(f"[{x}]_q = ({format_poly(qr.num)}) / ({format_poly(qr.den)}){_reduced_note(args.value, x)}")
    return 0


def cmd_expand(args) -> int:
    x = _value(args.value)
    reg, neg = expand_regular(x), expand_negative(x)
    if args.format == "json":
        _emit({"value": str(x), "regular": reg.to_json(), "negative": neg.to_json(), "reduced": bool(x.reduced)})
    else:
        print(f"{x} = {reg} = {neg}")
    return 0


def cmd_convert(args) -> int:
    cf = parse_cf(args.expansion)
    other = reg_to_neg(cf) if isinstance(cf, CFRegular) else neg_to_reg(cf)
    if args.format == "json":
        _emit({"input": cf.to_json(), "output": other.to_json(), "value": str(evaluate_cf(cf))})
    else:
        print(f"{cf} = {other} = {evaluate_cf(cf)}")
    return 0


def cmd_continuant(args) -> int:
    t = args.sequence.strip()
    if t.startswith("[") and not t.startswith("[["):
        seq = parse_cf(t).a
        k = continuant_reg(seq, first_index=args.first_index)
        kind = "K+"
    else:
        seq = _int_list(t)
        if any(c < 1 for c in seq):
            raise DomainError("continuant entries must be positive")
        k = continuant_neg(seq, variable="q_inverse" if args.q_inverse else "q")
        kind = "K"
    if args.format == "json":
        _emit({"kind": kind, "sequence": list(seq), "continuant": k.to_json()})
    else:
        print(_poly(k, args.format))
    return 0


def cmd_matrix(args) -> int:
    if args.generator:
        m = generators(args.generator, args.power)
        label = f"{args.generator.upper()}_q^{args.power}"
    else:
        if args.expansion is None:
            raise UsageError("matrix needs an expansion, a value or --generator")
        t = args.expansion.strip()
        if t.startswith("[["):
            seq = _int_list(t)
            m, label = matrix_neg(seq), f"M_q{parse_cf(t)}"
        elif t.startswith("["):
            a = parse_cf(t)
            m = matrix_reg_normalized(a) if args.normalized else matrix_reg(a)
            label = f"M+_q{a}"
        else:
            c = expand_negative(parse_rational(t))
            m, label = matrix_neg(c), f"M_q{c}"
    if args.format == "json":
        out = m.to_json()
        out["det"] = m.det().to_json()
        _emit(out)
    else:
        if args.format == "text":
            print(label)
        print(_mat_text(m, args.format))
        if args.format == "text":
            print(f"det = {format_poly(m.det())}")
    return 0


def cmd_farey(args) -> int:
    entries = farey_tree(args.depth)
    if args.format == "json":
        _emit({"depth": args.depth, "nodes": [e.to_json() for e in entries]})
        return 0
    for e in entries:
        n = e.node
        weight = "" if e.ell is None else f"  parent edge q^{e.ell - 1}, right edge q^{e.ell}"
        if args.format == "latex":
            body = f"\\frac{{{latex_poly(n.label.num)}}}{{{latex_poly(n.label.den)}}}"
        else:
            body = f"({format_poly(n.label.num)}) / ({format_poly(n.label.den)})"
        print(f"depth {e.depth}  {n.value}  {body}{weight}")
    return 0


def cmd_quiddity(args) -> int:
    if args.check:
        seq = _int_list(args.check)
        cls = quiddity_classify(seq)
        scalar = quiddity_scalar(seq)
        if args.format == "json":
            _emit({"sequence": list(seq), "class": cls.value, "scalar": None if scalar is None else scalar.to_json()})
        else:
            tail = "" if scalar is None else f", M_q = ({format_poly(scalar)}) Id"
            print(f"{cls.value}{tail}")
        return 0
    if args.value is None:
        raise UsageError("quiddity needs --check SEQUENCE or a value r/s")
    x = _value(args.value)
    tri = triangulation_build(expand_regular(x))
    quid = tri.quiddity_from(1)
    labels = [str(v) for v in tri.labels_from(1)]
    if args.format == "json":
        _emit({"value": str(x), "n": tri.n, "quiddity": list(quid), "labels": labels})
    else:
        print(f"T_{x}: {tri.n}-gon")
        print("labels:   " + " ".join(labels))
        print("quiddity: " + " ".join(str(c) for c in quid))
    return 0


def cmd_closures(args) -> int:
    x = _value(args.value)
    a = expand_regular(x)
    if args.jones:
        g = jones_graph(a)
        counts = jones_closure_counts(a)
        gf = None
    else:
        g = build_graph_prime(a) if args.prime else build_graph(a)
        gf = enumerate_closures(g)
        counts = gf.counts()
    poly = LaurentPoly(counts)
    if args.format == "json":
        out = {"value": str(x), "graph": str(g), "vertices": g.vertex_count, "counts": counts, "polynomial": poly.to_json()}
        if args.multivariate and gf is not None:
            out["closures"] = [[v + 1 for v in c] for c in gf.subsets()]
        _emit(out)
        return 0
    name = "jones graph" if args.jones else ("G'" if args.prime else "G")
    print(f"{name} of {x}: {g}  ({g.vertex_count} vertices)")
    print("closures by size: " + " ".join(str(c) for c in counts))
    print("polynomial: " + _poly(poly, args.format))
    if args.multivariate and gf is not None:
        for c in gf.subsets():
            print("{" + ",".join(str(v + 1) for v in c) + "}")
    return 0


def cmd_jones(args) -> int:
    x = _value(args.value)
    jp = jones(x, args.route)
    v = None
    if args.v_power is not None:
        v = to_signed_laurent(jp, args.v_power, -1 if args.v_sign == "-" else 1)
    fmt = "latex" if args.latex else args.format
    if fmt == "json":
        out = jp.to_json()
        out["route"] = args.route
        if v is not None:
            out["v"] = {"half_exponents": v.half_exponents, "sign": v.sign, "coeffs": v.coeffs.to_json(), "text": str(v)}
        _emit(out)
    else:
        print(_poly(jp.j, fmt))
        if v is not None:
            print(f"V(t) = {v}")
    return 0


def _sequence_cmd(args, kind: str) -> int:
    n = args.n
    if n < 1:
        raise DomainError("N must be at least 1")
    if args.triangle or args.csv or args.bfile:
        base = "fib" if kind == "fib" else "pell"
        rows = triangle_rows(base + ("_mirror" if args.mirror else ""), n)
        if args.csv:
            sys.stdout.write(rows_to_csv(rows))
        elif args.bfile:
            sys.stdout.write(rows_to_bfile(rows))
        elif args.format == "json":
            print(rows_to_json(rows))
        else:
            for row in rows:
                print(" ".join(str(c) for c in row))
        return 0
    p, pt = q_fibonacci(n) if kind == "fib" else q_pell(n)
    if args.format == "json":
        _emit({"n": n, "poly": p.to_json(), "mirror": pt.to_json()})
    else:
        sym = "F" if kind == "fib" else "P"
        print(f"{sym}_{n} = {_poly(p, args.format)}")
        print(f"{sym}~_{n} = {_poly(pt, args.format)}")
    return 0


def cmd_fib(args) -> int:
    return _sequence_cmd(args, "fib")


def cmd_pell(args) -> int:
    return _sequence_cmd(args, "pell")


def cmd_verify(args) -> int:
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    overrides = {"max_sum": args.max_sum, "max_a_sum": args.max_a_sum, "depth": args.depth, "samples": args.samples}
    reports = []
    for name in names:
        rep = run_suite(name, seed=args.seed, **overrides)
        reports.append(rep)
        if args.format != "json":
            print(rep.summary())
            for f in rep.failures[:10]:
                print(f"  input {f['input']}: expected {f['expected']}, got {f['actual']}")
    if args.format == "json":
        _emit({"seed": args.seed, "reports": [r.to_json() for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def cmd_conjectures(args) -> int:
    rep = conjecture_report(args.max_sum)
    if args.format == "json":
        _emit(rep)
        return 0
    print(f"scanned {rep['checked']} rationals with r + s <= {rep['max_sum']}")
    print(f"unimodality counterexamples: {len(rep['unimodality_counterexamples'])}")
    for item in rep["unimodality_counterexamples"]:
        print(f"  {item['x']}: R = {item['num']}, S = {item['den']}")
    print(f"(1+q+q^2) divisibility counterexamples: {len(rep['divisibility_counterexamples'])}")
    for item in rep["divisibility_counterexamples"]:
        print(f"  {item['x']}: R = {item['num']}")
    return 0


# -- parser ------------------------------------------------------------------------------------


def _default_format() -> str:
    fmt = os.environ.get("QRAT_FORMAT", "text")
    return fmt if fmt in FORMATS else "text"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=_default_format(), help="output format (env QRAT_FORMAT)")

    parser = argparse.ArgumentParser(prog="qrational", description="q-deformed rationals, continued fractions and rational-knot Jones polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qrat", parents=[common], help="q-deformation of r/s")
    p.add_argument("value", help="r/s, [a1,...,a2m] or [[c1,...,ck]]")
    p.set_defaults(func=cmd_qrat)

    p = sub.add_parser("expand", parents=[common], help="regular and negative expansions")
    p.add_argument("value")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convert", parents=[common], help="convert between regular and negative expansions")
    p.add_argument("expansion", help="[a1,...,a2m] or [[c1,...,ck]]")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("continuant", parents=[common], help="q-continuant of a sequence")
    p.add_argument("sequence", help="c1,c2,... or [[...]] for K, [a1,...] for the parity-aware K+")
    p.add_argument("--q-inverse", action="store_true", help="evaluate K in q^-1")
    p.add_argument("--first-index", type=int, default=1, help="absolute index of the first entry of K+")
    p.set_defaults(func=cmd_continuant)

    p = sub.add_parser("matrix", parents=[common], help="matrix of convergents or a generator power")
    p.add_argument("expansion", nargs="?", help="[[c...]], [a...] or r/s")
    p.add_argument("--normalized", action="store_true", help="multiply M+ by q^(a_2 + a_4 + ...)")
    p.add_argument("--generator", choices=["R", "L", "S"], help="print a generator instead")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("farey", parents=[common], help="weighted Farey tree on [1, oo)")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("quiddity", parents=[common], help="classify a quiddity sequence or show T_{r/s}")
    p.add_argument("value", nargs="?")
    p.add_argument("--check", metavar="SEQUENCE", help="comma separated cyclic sequence")
    p.set_defaults(func=cmd_quiddity)

    p = sub.add_parser("closures", parents=[common], help="closures of G_{r/s}")
    p.add_argument("value")
    p.add_argument("--prime", action="store_true", help="use G'_{r/s}")
    p.add_argument("--multivariate", action="store_true", help="list every closure (vertices numbered from 1)")
    p.add_argument("--jones", action="store_true", help="constrained count on the Jones graph")
    p.set_defaults(func=cmd_closures)

    p = sub.add_parser("jones", parents=[common], help="normalized Jones polynomial of C(r/s)")
    p.add_argument("value")
    p.add_argument("--route", choices=["auto", "continuant", "regular", "closures"], default="auto")
    p.add_argument("--latex", action="store_true", help="same as --format latex")
    p.add_argument("--v-power", type=int, metavar="HALVES", help="also print V(t) = ±t^(HALVES/2) J(-1/t)")
    p.add_argument("--v-sign", choices=["+", "-"], default="+")
    p.set_defaults(func=cmd_jones)

    for name, func, helptext in (("fib", cmd_fib, "q-Fibonacci polynomials"), ("pell", cmd_pell, "q-Pell polynomials")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("n", type=int, metavar="N")
        p.add_argument("--triangle", action="store_true", help="print rows 1..N of the coefficient triangle")
        p.add_argument("--mirror", action="store_true", help="use the mirrored triangle")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--csv", action="store_true", help="triangle as CSV")
        group.add_argument("--bfile", action="store_true", help="triangle as an OEIS b-file")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", help=f"repeatable; one of {', '.join(SUITES)} (default: all)")
    p.add_argument("--max-sum", type=int, help="bound on r + s")
    p.add_argument("--max-a-sum", type=int, help="bound on a_1 + ... + a_2m for the closure sweep")
    p.add_argument("--depth", type=int, help="Farey tree depth")
    p.add_argument("--samples", type=int, help="number of random cases")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjectures", parents=[common], help="report-only conjecture scans")
    p.add_argument("--max-sum", type=int, default=30)
    p.set_defaults(func=cmd_conjectures)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key in ("max_sum", "max_a_sum", "depth", "samples"):
        value = getattr(args, key, None)
        if value is not None and value < (0 if key == "depth" else 1):
            parser.error(f"--{key.replace('_', '-')} must be positive")
    try:
        return args.func(args)
    except (MalformedInputError, UsageError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


__all__ = ["main", "build_parser"]
