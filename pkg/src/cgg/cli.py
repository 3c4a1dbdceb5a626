"""Command line: ``cgg construct | verify | fmax | search | table``.

Exit status: 0 success, 1 a verification or certification failed, 2 bad usage
or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import f_max, valid_params
from .constructions import construct_extremal, construct_gnk, construct_gnkl
from .errors import CggError
from .io import parse_document, serialize
from .render import render_dot, render_svg, styling_from_meta
from .search import DEFAULT_BUDGET, search_f, verify_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build(args) -> tuple:
    n, k = args.n, args.k
    if args.ell is not None and args.q is not None:
        raise CggError("give at most one of --ell and --q")
    if args.ell is not None:
        if args.ell == 0:
            return construct_gnk(n, k), {"construction": "Gnk", "k": k, "q": n - 2 * k}
        g = construct_gnkl(n, k, args.ell)
        return g, {"construction": "Gnkl", "k": k, "ell": args.ell, "q": n - 2 * k + args.ell}
    if args.q is not None:
        q = args.q
        g = construct_extremal(n, k, q)
        if q <= n - 2 * k:
            meta = {"construction": "Gnk", "k": k, "q": n - 2 * k}
        elif q < n - k:
            meta = {"construction": "Gnkl", "k": k, "ell": q - (n - 2 * k), "q": q}
        else:
            meta = {"construction": "star", "k": k, "q": q}
        return g, meta
    return construct_gnk(n, k), {"construction": "Gnk", "k": k, "q": n - 2 * k}


def cmd_construct(args) -> int:
    g, meta = _build(args)
    if args.format == "json":
        text = serialize(g, meta)
    elif args.format == "svg":
        text = render_svg(g, **styling_from_meta(g, meta))
    else:
        text = render_dot(g, **{k: v for k, v in styling_from_meta(g, meta).items()
                                if k in ("edge_classes", "avoided")})
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            doc = parse_document(fh.read())
    except OSError as exc:
        raise CggError(f"cannot read {args.file}: {exc.strerror}") from None
    q = args.q if args.q is not None else doc.meta.get("q")
    construction = doc.meta.get("construction")
    if construction == "Gnk" and doc.meta.get("k") != args.k:
        construction = None
    report = verify_graph(doc.graph, args.k, q, construction=construction)
    if args.json:
        print(json.dumps(report.as_dict(), sort_keys=True, indent=2))
    else:
        print(f"n={report.n} k={report.k} q={report.q} edges={report.edge_count} "
              f"f_max={report.f_max}")
        print(f"max disjoint edges: {report.max_disjoint.size} "
              f"{[e.as_list() for e in report.max_disjoint.edges]}")
        print(f"longest free arc: {report.longest_free_arc}")
        for name, ok in report.checks.items():
            print(f"  {'PASS' if ok else 'FAIL'}  {name}")
        for note in report.notes:
            print(f"  note: {note}")
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_fmax(args) -> int:
    res = f_max(args.n, args.k, args.q)
    if args.json:
        print(json.dumps({"value": res.value, "clause": res.clause.value, "ell": res.ell}))
    else:
        extra = f", ell={res.ell}" if res.ell else ""
        print(f"{res.value}  (clause {res.clause.value}: {res.clause.name}{extra})")
    return EXIT_OK


def cmd_search(args) -> int:
    cert = search_f(args.n, args.k, args.q, args.budget)
    expected = f_max(args.n, args.k, args.q).value
    agrees = not cert.budget_exhausted and cert.optimum == expected
    if args.json:
        print(json.dumps({
            "n": args.n, "k": args.k, "q": args.q,
            "optimum": cert.optimum, "f_max": expected,
            "nodes_explored": cert.nodes_explored,
            "budget_exhausted": cert.budget_exhausted,
            "witness": [e.as_list() for e in cert.witness.sorted_edges()],
            "parity": cert.witness.labelling.parity,
        }, sort_keys=True))
    else:
        status = "lower bound only (budget exhausted)" if cert.budget_exhausted else "exact"
        print(f"optimum {cert.optimum} ({status}); f_max {expected}; "
              f"{'matches' if cert.optimum == expected else 'DIFFERS'}; "
              f"nodes {cert.nodes_explored}")
    return EXIT_OK if agrees else EXIT_FAIL


def fmax_table(n_max: int) -> list[dict]:
    rows = []
    for n in range(4, n_max + 1):
        for k in range(1, n // 2):
            rows.append({"n": n, "k": k,
                         "values": {q: f_max(n, k, q).value for q in range(1, n_max)
                                    if valid_params(n, k, q)}})
    return rows


def cmd_table(args) -> int:
    if args.n_max < 4:
        raise CggError("--n-max must be >= 4")
    rows = fmax_table(args.n_max)
    qs = list(range(1, args.n_max))
    if args.json:
        print(json.dumps([{"n": r["n"], "k": r["k"],
                           "f": {str(q): v for q, v in r["values"].items()}} for r in rows],
                         sort_keys=True))
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k"] + [f"q={q}" for q in qs])
        for r in rows:
            w.writerow([r["n"], r["k"]] + [r["values"].get(q, "") for q in qs])
        sys.stdout.write(buf.getvalue())
    else:
        width = max(4, len(str(max(max(r["values"].values()) for r in rows))) + 1)
        print("  n  k |" + "".join(f"{q:>{width}}" for q in qs))
        for r in rows:
            cells = "".join(f"{r['values'].get(q, ''):>{width}}" for q in qs)
            print(f"{r['n']:>3}{r['k']:>3} |{cells}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cgg", description="Extremal convex geometric graphs with no k+1 disjoint edges.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build G_{n,k}, G_{n,k,l} or the extremal graph for q")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--ell", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--out", help="output file (default: stdout)")
    c.add_argument("--format", choices=("json", "svg", "dot"), default="json")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a JSON graph document")
    v.add_argument("file")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--q", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fmax", help="closed-form f(n,k,q)")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fmax)

    s = sub.add_parser("search", help="certify f(n,k,q) by branch and bound")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="print the f(n,k,q) grid")
    t.add_argument("--n-max", type=int, required=True)
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CggError, ValueError) as exc:
        print(f"cgg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
