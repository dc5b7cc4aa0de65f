"""Command line front end."""
from __future__ import annotations

import argparse
import json
import sys

from .dl_core import INFINITY, dim_lower, format_element, format_product, format_word, product_dim, to_upper
from .expr import ExprError, parse_class
from .loopspace import STABLE, BasisQuery, enumerate_basis, max_suspension, suspend
from .nishida import is_A_annihilated, sq_dual

EXIT_OK, EXIT_ERROR, EXIT_UNRESOLVED, EXIT_DISCREPANCY = 0, 1, 2, 3


def _loop_bound(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("loop bound must be positive")
    return v


def _class(text: str):
    try:
        return parse_class(text)
    except ExprError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_basis(args) -> int:
    q = BasisQuery(args.l, args.n, args.max_dim)
    if args.products:
        items = enumerate_basis(q, products=True)
        rows = [(product_dim(p, q.n), format_product(p, q.n)) for p in items]
    else:
        items = enumerate_basis(q)
        rows = [(dim_lower(J, q.n), format_word(to_upper(J, q.n), q.n) + (f"  J={list(J)}" if J else ""))
                for J in items]
    if args.json:
        print(json.dumps([{"dim": d, "class": s} for d, s in rows], indent=1))
    else:
        for d, s in rows:
            print(f"{d:5d}  {s}")
    return EXIT_OK


def cmd_sq(args) -> int:
    print(format_element(sq_dual(args.r, args.cls)))
    return EXIT_OK


def cmd_annihilated(args) -> int:
    res = is_A_annihilated(args.cls)
    if res:
        print("A-annihilated")
    else:
        print(f"not A-annihilated: Sq^{res.witness_degree}_* -> {format_element(res.image)}")
    return EXIT_OK


def cmd_suspend(args) -> int:
    if args.max:
        j, img = max_suspension(args.cls)
        print(f"{'STABLE' if j == STABLE else j}: {format_element(img)}")
    else:
        print(format_element(suspend(args.cls, args.steps)))
    return EXIT_OK


def cmd_candidates(args) -> int:
    from .pipeline.candidates import enumerate_candidates

    for c in enumerate_candidates(args.l):
        print(c.label() + ("  EXTRA" if c.extra else ""))
    return EXIT_OK


def cmd_eliminate(args) -> int:
    from .pipeline.elimination import UNRESOLVED, report_json, run_elimination, summarize
    from .pipeline.facts import load_facts

    facts = load_facts(args.facts)
    rows = run_elimination(args.l, range(args.n_from, args.n_to + 1), facts)
    if args.format == "json":
        text = report_json(rows, args.l, facts)
    else:
        lines = []
        for r in rows:
            v = r.verdict
            lines.append(f"n={r.n:<3d} {r.candidate.label():<16s} {r.class_name():<40s} "
                         f"{v.status}{' ' + v.pass_ if v.pass_ else ''}")
        s = summarize(rows)
        lines.append("")
        lines.append(" ".join(f"{k}={v}" for k, v in s["status"].items()))
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_UNRESOLVED if any(r.verdict.status == UNRESOLVED for r in rows) else EXIT_OK


def cmd_table(args) -> int:
    from .pipeline.tables import build_table, render

    table = build_table(args.kind, n_max=args.n_max)
    sys.stdout.write(render(table, args.format))
    if table.footnotes and not args.warn_only:
        return EXIT_DISCREPANCY
    if table.footnotes:
        print(f"warning: {len(table.footnotes)} discrepancy footnote(s)", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .pipeline.tables import FORMATS, KINDS

    ap = argparse.ArgumentParser(prog="loopsphere", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="generators (or monomials) of H_*(Omega^l S^{n+l})")
    p.add_argument("--l", type=_loop_bound, required=True, help="loop bound, or 'inf'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--products", action="store_true", help="list all monomials")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("sq", help="dual Steenrod operation Sq^r_*")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_class, required=True)
    p.set_defaults(func=cmd_sq)

    p = sub.add_parser("annihilated", help="A-annihilation test with witness")
    p.add_argument("--class", dest="cls", type=_class, required=True)
    p.set_defaults(func=cmd_annihilated)

    p = sub.add_parser("suspend", help="iterated homology suspension")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--max", action="store_true", help="report the largest nonzero suspension")
    p.add_argument("--class", dest="cls", type=_class, required=True)
    p.set_defaults(func=cmd_suspend)

    p = sub.add_parser("candidates", help="candidate sequences J")
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("eliminate", help="run the elimination passes")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-from", type=int, default=1)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--facts", default=None, help="facts JSON file (bundled defaults if omitted)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("table", help="regenerate a published table")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--n-max", type=int, default=128)
    p.add_argument("--warn-only", action="store_true", help="exit 0 even with discrepancy footnotes")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
