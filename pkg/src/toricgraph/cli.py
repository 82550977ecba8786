"""Command line interface.

Subcommands: walks, ideal, betti (library surfaces); example, check,
search, tn (reproduction harness); fixture (emit a bundled graph). Exit
status is nonzero whenever an expectation or theorem conclusion fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .betti import betti_table, betti_via_koszul
from .binomials import (
    TermOrder,
    format_binomial,
    format_monomial,
    initial_ideal,
    minimal_generators,
    toric_ideal,
)
from .fixtures import FIXTURES
from .graphs import (
    SimpleGraph,
    graph_to_dict,
    load_graph,
    save_graph,
    triangle_sequence,
)
from .walks import enumerate_primitive_walks, walk_binomial
from ._kernels import BACKEND


def _order_from_args(args) -> TermOrder:
    perm = None
    if getattr(args, "perm", None):
        perm = tuple(int(x) - 1 for x in args.perm.split(","))
    return TermOrder(getattr(args, "order", "degrevlex"), perm)


def _field_from_args(args):
    if args.field == "exact":
        return None
    return int(args.field)


def _print_table(totals, label="beta"):
    idx = "  ".join(f"{i:>4d}" for i in range(len(totals)))
    val = "  ".join(f"{v:>4d}" for v in totals)
    print(f"  i:      {idx}")
    print(f"  {label}: {val}")


def cmd_walks(args) -> int:
    graph = load_graph(args.graph)
    walks = enumerate_primitive_walks(graph)
    print(f"{len(walks)} primitive even closed walks")
    for w in walks:
        binom = walk_binomial(w)
        verts = "-".join(str(v) for v in w.vertices)
        print(f"  ({verts})  {format_binomial(binom)}")
    return 0


def cmd_ideal(args) -> int:
    graph = load_graph(args.graph)
    order = _order_from_args(args)
    ideal = toric_ideal(graph, order)
    gens = minimal_generators(ideal)
    print(f"variables: e1..e{graph.n_edges}  order: {order.kind}")
    print(f"minimal generators ({len(gens)}):")
    for g in gens:
        print(f"  {format_binomial(g, order=order)}")
    print(f"reduced Groebner basis ({len(ideal.gens)}):")
    for g in ideal.gens:
        print(f"  {format_binomial(g, order=order)}")
    leads = initial_ideal(ideal)
    print(f"initial ideal ({len(leads)}):")
    for m in leads:
        print(f"  {format_monomial(m)}")
    return 0


def cmd_betti(args) -> int:
    graph = load_graph(args.graph)
    table = betti_table(
        graph,
        field=_field_from_args(args),
        mode=args.mode,
        max_degree=args.max_degree,
        use_shortcuts=not args.no_shortcuts,
    )
    _print_table(table.totals)
    print(
        f"  codim {table.codim}  pd {table.pd}  depth {table.depth}"
        f"  dim {table.krull_dim}  CM {table.cm}  Gorenstein {table.gorenstein}"
    )
    if not table.complete:
        print("  warning: degree bound below candidate support", file=sys.stderr)
    if args.json:
        Path(args.json).write_text(json.dumps(table.as_dict(), indent=2) + "\n")
        print(f"  wrote {args.json}")
    return 0


def cmd_koszul(args) -> int:
    graph = load_graph(args.graph)
    s = tuple(int(x) for x in args.degree.split(","))
    betas = betti_via_koszul(graph, s, field=_field_from_args(args))
    print(f"s = {s}: beta = {betas or [0]}")
    return 0


def cmd_example(args) -> int:
    report = checks.reproduce(args.id)
    for row in report.details["rows"]:
        status = "ok" if row["ok"] else "MISMATCH"
        line = f"  {row['label']:>10s}: {tuple(row.get('computed', ()))}"
        if "expected" in row:
            line += f"  expected {tuple(row['expected'])}"
        if "cm" in row:
            line += f"  CM={row['cm']}"
        print(f"{line}  [{status}]")
    if "erratum" in report.details:
        err = report.details["erratum"]
        print(
            f"  note: published table {tuple(err['printed'])} is inconsistent"
            f" ({err['reason']}); using {tuple(err['corrected'])}"
        )
    print("PASS" if report.conclusion_ok else "FAIL")
    return 0 if report.conclusion_ok else 1


def _parse_vertices(text):
    return [int(x) for x in text.replace("-", ",").split(",") if x]


def cmd_check(args) -> int:
    graph = load_graph(args.graph)
    thm = args.theorem
    if thm == "thm-2.5":
        if not args.path:
            raise SystemExit("thm-2.5 needs --path")
        report = checks.check_theorem_2_5(graph, _parse_vertices(args.path))
    elif thm == "thm-2.7":
        if not (args.path and args.q):
            raise SystemExit("thm-2.7 needs --path and --q")
        report = checks.check_theorem_2_7(
            graph, _parse_vertices(args.path), _parse_vertices(args.q)
        )
    elif thm == "lemma-2.3":
        if not args.path:
            raise SystemExit("lemma-2.3 needs --path")
        report = checks.check_lemma_2_3(graph, _parse_vertices(args.path))
    elif thm == "thm-4.2":
        if not args.edge:
            raise SystemExit("thm-4.2 needs --edge")
        report = checks.check_theorem_4_2(graph, _parse_vertices(args.edge))
    elif thm == "prop-4.3":
        if not args.edge:
            raise SystemExit("prop-4.3 needs --edge")
        report = checks.check_prop_4_3(graph, _parse_vertices(args.edge))
    elif thm == "question-4.5":
        if not args.edge:
            raise SystemExit("question-4.5 needs --edge")
        report = checks.question_4_5(graph, _parse_vertices(args.edge))
    else:
        raise SystemExit(f"unknown theorem id {thm!r}")
    print(json.dumps(report.as_dict(), indent=2))
    if not report.hypotheses_ok:
        print("hypotheses not met", file=sys.stderr)
        return 2
    return 0 if report.conclusion_ok in (True, None) else 1


def cmd_search(args) -> int:
    spec = json.loads(Path(args.spec).read_text())
    reports = checks.search(spec, seed=args.seed, budget=args.budget)
    sink = Path(args.out).open("w") if args.out else sys.stdout
    counterexamples = 0
    try:
        for k, rep in enumerate(reports):
            sink.write(json.dumps(rep.as_dict()) + "\n")
            if rep.counterexample:
                counterexamples += 1
                if args.counterexample_dir:
                    cdir = Path(args.counterexample_dir)
                    cdir.mkdir(parents=True, exist_ok=True)
                    graph = rep.details.get("graph")
                    if graph is not None:
                        out = cdir / f"{spec['target']}-seed{args.seed}-{k}.json"
                        out.write_text(json.dumps(graph) + "\n")
    finally:
        if args.out:
            sink.close()
    checked = sum(1 for r in reports if r.hypotheses_ok)
    print(
        f"{len(reports)} instances, {checked} with valid hypotheses,"
        f" {counterexamples} counterexamples",
        file=sys.stderr,
    )
    return 1 if counterexamples else 0


def cmd_tn(args) -> int:
    if args.connect:
        graph, e = checks.tn_connected_pair(args.n, args.connect)
        print(f"T_{args.n} -e- T_{args.connect}, bridge {e}")
    else:
        graph = triangle_sequence(args.n)
        print(f"T_{args.n}: {graph.n_vertices} vertices, {graph.n_edges} edges")
    table = betti_table(graph)
    _print_table(table.totals)
    print(
        f"  codim {table.codim}  pd {table.pd}  Krull dim {table.krull_dim}"
        f"  CM {table.cm}  Gorenstein {table.gorenstein}"
    )
    if not args.connect:
        print(
            f"  note: codim = n-1 = {args.n - 1}; the Krull dimension is"
            f" {table.krull_dim}, not n-1"
        )
    return 0


def cmd_fixture(args) -> int:
    fx = FIXTURES[args.id]
    if args.out:
        save_graph(fx.graph, args.out)
        print(f"wrote {args.out}")
    else:
        print(json.dumps(graph_to_dict(fx.graph)))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="toricgraph",
        description="Toric ideals of graphs: Betti tables and contraction checks"
        f" (linear algebra backend: {BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walks", help="primitive even closed walks and binomials")
    p.add_argument("graph")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("ideal", help="toric ideal: generators, GB, initial ideal")
    p.add_argument("graph")
    p.add_argument("--order", choices=["lex", "degrevlex"], default="degrevlex")
    p.add_argument("--perm", help="variable priority, e.g. 3,1,2 (1-based)")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("betti", help="Betti table of the edge ring")
    p.add_argument("graph")
    p.add_argument("--field", default="32003", help="prime p or 'exact'")
    p.add_argument("--mode", choices=["guided", "exhaustive"], default="guided")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--no-shortcuts", action="store_true")
    p.add_argument("--json", help="write the table as JSON to this path")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("koszul", help="Koszul-oracle Betti numbers at one multidegree")
    p.add_argument("graph")
    p.add_argument("degree", help="comma-separated multidegree over the vertices")
    p.add_argument("--field", default="32003")
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("example", help="reproduce a worked example")
    p.add_argument("id", choices=["ex-2.8", "ex-2.9", "ex-2.10", "ex-2.11", "fig-10", "fig-11", "fig-12"])
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("check", help="validate a theorem on a given instance")
    p.add_argument("theorem")
    p.add_argument("graph")
    p.add_argument("--path", help="vertex list of p, e.g. 1,9,10")
    p.add_argument("--q", help="vertex list of q (thm-2.7)")
    p.add_argument("--edge", help="edge, e.g. 3,4")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="seeded random search over a family")
    p.add_argument("spec", help="JSON file: {\"target\": ..., \"family\": {...}}")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--out", help="JSONL report sink (default stdout)")
    p.add_argument("--counterexample-dir", help="directory for reproducer graphs")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tn", help="triangle sequence T_n (optionally joined to T_m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connect", type=int, default=None, metavar="M")
    p.set_defaults(func=cmd_tn)

    p = sub.add_parser("fixture", help="emit a bundled fixture graph as JSON")
    p.add_argument("id", choices=sorted(FIXTURES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixture)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
