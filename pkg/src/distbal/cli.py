"""Command-line interface.

Exit codes: 0 success (or every claim holds), 1 counterexample found,
2 usage error, 3 input error. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

from distbal import constructions as con
from distbal.errors import DistbalError
from distbal.formats import read_graphs, write_graph
from distbal.graph import Graph, all_pairs_distances
from distbal.reports import analysis_dict, analysis_document
from distbal.verification import ClaimId, check_claim

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return "edges" if " " in line or line.isdigit() else "g6"
    return "g6"


def _load(path: str, fmt: str) -> list[Graph]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        fmt = _detect_format(text)
    try:
        graphs = read_graphs(io.StringIO(text), fmt)
    except (DistbalError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if not graphs:
        raise InputError(f"{path}: no graphs found")
    return graphs


def _load_one(path: str, fmt: str) -> Graph:
    graphs = _load(path, fmt)
    if len(graphs) != 1:
        raise InputError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def _parse_ks(text: str) -> list[int]:
    try:
        ks = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"--k expects comma-separated integers, got {text!r}") from None
    if not ks or ks[0] < 1:
        raise argparse.ArgumentTypeError("--k values must be positive")
    return ks


def cmd_generate(args) -> int:
    try:
        spec = con.FamilySpec(args.family, tuple(args.params))
        G = con.generate(spec)
    except DistbalError as exc:
        raise _Usage(str(exc)) from None
    sys.stdout.write(write_graph(G, args.format))
    return EXIT_OK


def _flag_line(name: str, verdict: dict) -> str:
    if verdict["holds"]:
        return f"  {name}: yes"
    w = verdict["witness"]
    where = f"edge {w['edge']} " if "edge" in w else ""
    return f"  {name}: no ({where}pair {w['g']},{w['h']}: {w['left']} vs {w['right']})"


def _print_text(rep: dict) -> None:
    out = sys.stdout
    out.write(
        f"{rep['graph6']}  n={rep['n']} m={rep['m']} connected={rep['connected']} "
        f"bipartite={rep['bipartite']} even_cycle={rep['has_even_cycle']} diameter={rep['diameter']}\n"
    )
    if rep["balance"] is None:
        out.write("  (disconnected: balance properties not defined)\n")
        return
    b = rep["balance"]
    out.write(_flag_line("EDB", b["edb"]) + "\n")
    out.write(_flag_line("DB", b["db"]) + "\n")
    for k, flags in b["by_distance"].items():
        for name in ("edb", "db", "locally_regular", "delta"):
            out.write(_flag_line(f"{k}-{name}", flags[name]) + "\n")
    out.write(f"  total distances: {rep['total_distances']}\n")


def cmd_analyze(args) -> int:
    graphs = _load(args.file, args.format)
    reports = [analysis_dict(G, args.k, args.pairs, args.delta_reading) for G in graphs]
    if args.json:
        json.dump(analysis_document(reports), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for rep in reports:
            _print_text(rep)
    return EXIT_OK


def _distance_check(kind: str, A: Graph, B: Graph, P: Graph, vmap) -> int:
    oa, ob, op = all_pairs_distances(A), all_pairs_distances(B), all_pairs_distances(P)
    bad = 0
    for u in range(P.n):
        for v in range(P.n):
            if con.product_distance(kind, oa, ob, vmap.pair(u), vmap.pair(v)) != op(u, v):
                bad += 1
    return bad


def cmd_product(args) -> int:
    A = _load_one(args.file_a, args.format)
    B = _load_one(args.file_b, args.format)
    try:
        build = con.cartesian_product if args.kind == "cartesian" else con.lexicographic_product
        P, vmap = build(A, B)
    except DistbalError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(write_graph(P, args.out_format))
    if args.check_distances:
        kind = "cartesian" if args.kind == "cartesian" else "lexicographic"
        if not (all_pairs_distances(A).connected and all_pairs_distances(B).connected) or (
            kind == "lexicographic" and A.n < 2
        ):
            raise InputError("--check-distances needs connected factors (and |V(A)| >= 2 for lex)")
        bad = _distance_check(kind, A, B, P, vmap)
        print(f"distance check: {P.n * P.n - bad}/{P.n * P.n} vertex pairs match", file=sys.stderr)
        if bad:
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_transform(args) -> int:
    outputs = []
    for G in _load(args.file, args.format):
        T, _ = (con.subdivision if args.kind == "s" else con.triangle_extension)(G)
        outputs.append(write_graph(T, args.out_format))
    sys.stdout.write("".join(outputs))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.claim.lower() == "all":
        claims = list(ClaimId)
    else:
        try:
            claims = [ClaimId(args.claim)]
        except ValueError:
            raise _Usage(f"unknown claim {args.claim!r}; choose from {', '.join(c.value for c in ClaimId)} or all") from None
    graphs = _load(args.corpus, "g6") if args.corpus else None
    reports = []
    for claim in claims:
        try:
            rep = check_claim(claim, max_n=args.max_n, graphs=graphs, delta_reading=args.delta_reading)
        except DistbalError as exc:
            raise InputError(str(exc)) from None
        reports.append(rep)
        print(f"{claim.value}: {rep.elapsed:.2f}s", file=sys.stderr)
    if args.json:
        doc = {"reports": [r.to_dict(timing=args.timing) for r in reports]}
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for r in reports:
            print(r.summary())
            for cx in r.counterexamples[: args.show]:
                print(f"  counterexample {json.dumps(cx.to_dict(), sort_keys=True)}")
            for an in r.anomalies:
                print(f"  anomaly {an.graph6}: {an.explanation}")
    return EXIT_OK if all(r.holds for r in reports) else EXIT_COUNTEREXAMPLE


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distbal", description="Distance-balance invariants of simple graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt_choices = ["auto", "g6", "edges"]

    g = sub.add_parser("generate", help="emit a named family graph")
    g.add_argument("family", choices=sorted(con.FAMILIES))
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--format", choices=["g6", "edges"], default="g6")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="balance report for each input graph")
    a.add_argument("file", help="input file, or - for stdin")
    a.add_argument("--format", choices=fmt_choices, default="auto")
    a.add_argument("--k", type=_parse_ks, default=[2, 3], help="pair distances, e.g. 2,3")
    a.add_argument("--json", action="store_true")
    a.add_argument("--pairs", action="store_true", help="include per-pair counts (JSON only)")
    a.add_argument("--delta-reading", choices=["exists", "every"], default="exists")
    a.set_defaults(func=cmd_analyze)

    pr = sub.add_parser("product", help="cartesian or lexicographic product of two graphs")
    pr.add_argument("kind", choices=["cartesian", "lex"])
    pr.add_argument("file_a")
    pr.add_argument("file_b")
    pr.add_argument("--format", choices=fmt_choices, default="auto")
    pr.add_argument("--out-format", choices=["g6", "edges"], default="g6")
    pr.add_argument("--check-distances", action="store_true", help="compare closed-form and BFS distances")
    pr.set_defaults(func=cmd_product)

    t = sub.add_parser("transform", help="subdivision S(A) or triangle extension R(A)")
    t.add_argument("kind", choices=["s", "r"])
    t.add_argument("file")
    t.add_argument("--format", choices=fmt_choices, default="auto")
    t.add_argument("--out-format", choices=["g6", "edges"], default="g6")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="check claims over small-graph corpora")
    v.add_argument("claim", help="claim id or 'all'")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--corpus", help="graph6 file used instead of enumeration")
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    v.add_argument("--show", type=int, default=3, help="counterexamples printed per claim (text mode)")
    v.add_argument("--delta-reading", choices=["exists", "every"], default="exists")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"distbal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"distbal: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
