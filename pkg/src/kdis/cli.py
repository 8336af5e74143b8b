"""Command-line entry point: ``kdis <subcommand> ...``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 on domain errors (bad graph, no such field, ...) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes, extremal, geometry
from .generators import parse_graph_expr
from .graph import Graph, GraphError, format_edge_list, graph6_decode, graph6_encode, parse_edge_list
from .search import count_kdis, enumerate_kdis
from .trees import NotAForestError, solve_tree_kdis


class DomainError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help='generator expression, e.g. "cart(K3,K3)"')
    src.add_argument("--g6", help="graph6 string or a file holding one")
    src.add_argument("--edges", help='edge-list file ("n m" header, then "u v" lines)')


def _load_graph(args) -> Graph:
    if args.graph is not None:
        return parse_graph_expr(args.graph)
    if args.g6 is not None:
        path = Path(args.g6)
        text = path.read_text() if path.is_file() else args.g6
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return graph6_decode(first)
    try:
        return parse_edge_list(Path(args.edges).read_text())
    except OSError as exc:
        raise DomainError(f"cannot read {args.edges}: {exc.strerror}") from None


def _fmt_set(s) -> str:
    return " ".join(map(str, sorted(s))) if s else "{}"


def _emit(args, plain: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in plain:
            print(line)


def cmd_count(args):
    G = _load_graph(args)
    c = count_kdis(G, args.k)
    _emit(args, [str(c)], {"n": G.n, "k": args.k, "count": c})


def cmd_enumerate(args):
    G = _load_graph(args)
    sets = enumerate_kdis(G, args.k)
    _emit(args, [str(len(sets))] + [_fmt_set(s) for s in sets],
          {"n": G.n, "k": args.k, "count": len(sets), "sets": [list(s) for s in sets]})


def cmd_tree(args):
    G = _load_graph(args)
    D = solve_tree_kdis(G, args.k)
    _emit(args, ["NONE" if D is None else _fmt_set(D)],
          {"n": G.n, "k": args.k, "kdis": None if D is None else sorted(D)})


def _print_report(args, report: extremal.SearchReport) -> None:
    if args.json:
        print(report.to_json())
    else:
        print(report.max_count)
        for w in report.witnesses:
            print(w)


def cmd_extremal(args):
    report = extremal.max_kdis_count(
        args.n, args.k, shards=args.shards, workers=args.workers,
        long_run=args.long_run, checkpoint=args.checkpoint,
    )
    _print_report(args, report)


def cmd_extremal_trees(args):
    _print_report(args, extremal.max_kdis_count_trees(args.n, args.k))


def cmd_mds(args):
    if args.oracle:
        found = codes.mds_codes_bruteforce(args.k)
    else:
        found = codes.mds_codes_via_kdis(args.k) if args.codes else None
    count = len(found) if found is not None else codes.count_mds_via_kdis(args.k)
    plain = [str(count)]
    if args.codes and found is not None:
        for C in sorted(found, key=lambda c: c.sorted_words()):
            plain.append("")
            plain.extend(C.format().split())
    payload = {"k": args.k, "count": count}
    if args.codes and found is not None:
        payload["codes"] = [["".join(map(str, w)) for w in C.sorted_words()] for C in found]
    _emit(args, plain, payload)


def cmd_mds_linear(args):
    c = codes.count_linear_mds_q3(args.k)
    _emit(args, [str(c)], {"k": args.k, "count": c})


def cmd_geometry(args):
    plane = geometry.build_pg2(args.q)
    N = plane.order
    if args.action == "build":
        payload = {"q": args.q, "points": N, "lines": N, "points_per_line": args.q + 1,
                   "modulus": plane.gf.modulus}
        plain = [str(N), f"lines {N}", f"points_per_line {args.q + 1}"]
        if args.write_g6:
            Path(args.write_g6).write_text(graph6_encode(geometry.incidence_graph(plane)) + "\n")
        _emit(args, plain, payload)
    elif args.action == "hyperoval":
        from .search import is_kdis

        H = geometry.regular_hyperoval(plane)
        skew = geometry.skew_lines(plane, H)
        D = geometry.hyperoval_dis(plane, H)
        ok = is_kdis(geometry.incidence_graph(plane), D, 2)
        plain = [str(len(D)), f"hyperoval {len(H)}", f"skew_lines {len(skew)}", f"is_2dis {str(ok).lower()}"]
        if args.list:
            plain.extend(geometry.format_point_set(plane, H).split())
        _emit(args, plain, {"q": args.q, "dis_size": len(D), "hyperoval": len(H), "skew_lines": len(skew),
                            "is_2dis": ok, "points": [list(plane.points[i]) for i in sorted(H)]})
    else:
        if not args.points_file:
            raise DomainError("geometry check needs --points FILE")
        try:
            text = Path(args.points_file).read_text()
        except OSError as exc:
            raise DomainError(f"cannot read {args.points_file}: {exc.strerror}") from None
        Q = geometry.parse_point_set(plane, text)
        ok, violations = geometry.check_arc_conditions(plane, Q, args.k)
        plain = [str(ok).lower()] + [f"{v.kind} {':'.join(map(str, (plane.lines if v.kind == 'line' else plane.points)[v.index]))} {v.count}" for v in violations]
        _emit(args, plain, {"q": args.q, "k": args.k, "ok": ok,
                            "violations": [{"kind": v.kind, "index": v.index, "count": v.count} for v in violations]})


def _model(args, samples=1000, seed=0):
    return extremal.RandomModelParams(args.n, args.t, args.k, args.p, samples, seed)


def cmd_expect(args):
    v = extremal.expected_kdis_count(_model(args))
    _emit(args, [repr(v)], {"n": args.n, "t": args.t, "k": args.k, "p": args.p, "expected": v})


def cmd_montecarlo(args):
    params = _model(args, args.samples, args.seed)
    mean, se = extremal.monte_carlo_expected(params)
    exact = extremal.expected_kdis_count(params)
    _emit(args, [f"{mean!r} {se!r}", f"expected {exact!r}"],
          {"mean": mean, "stderr": se, "expected": exact, "samples": args.samples, "seed": args.seed})


def cmd_bounds(args):
    value, d = extremal.alpha_bound(args.k)
    payload = {"k": args.k, "alpha": value, "d": d}
    plain = [repr(value), f"d {d}"]
    if args.k == 2:
        roots = extremal.upper_bound_roots()
        payload.update(roots)
        plain.extend(f"{name} {val!r}" for name, val in roots.items())
    _emit(args, plain, payload)


def cmd_convert(args):
    G = _load_graph(args)
    if args.to == "g6":
        out = graph6_encode(G) + "\n"
    else:
        out = format_edge_list(G)
    if args.json:
        print(json.dumps({"n": G.n, "graph6": graph6_encode(G), "edges": G.edges()}))
    else:
        sys.stdout.write(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kdis", description="k-dominating independent set toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "count k-DISes")
    _add_graph_args(p)
    p.add_argument("-k", type=int, required=True)
    p = add("enumerate", cmd_enumerate, "list k-DISes")
    _add_graph_args(p)
    p.add_argument("-k", type=int, required=True)
    p = add("tree", cmd_tree, "unique k-DIS of a forest (k >= 2)")
    _add_graph_args(p)
    p.add_argument("-k", type=int, required=True)

    shards_default = extremal.default_shards()
    p = add("extremal", cmd_extremal, "maximum k-DIS count over all n-vertex graphs")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--shards", type=int, default=shards_default)
    p.add_argument("--workers", type=int, default=None, help="worker processes (default 1)")
    p.add_argument("--long-run", action="store_true", help="allow n = 9")
    p.add_argument("--checkpoint", help="resume file for long runs")
    p = add("extremal-trees", cmd_extremal_trees, "maximum k-DIS count over labelled trees")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)

    p = add("mds", cmd_mds, "count (k, 3^(k-1), 2) ternary MDS codes")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--codes", action="store_true", help="also print the codes")
    p.add_argument("--oracle", action="store_true", help="use the colouring brute force (k <= 3)")
    p = add("mds-linear", cmd_mds_linear, "count linear ternary MDS codes of distance 2")
    p.add_argument("-k", type=int, required=True)

    p = add("geometry", cmd_geometry, "PG(2,q) tools")
    p.add_argument("action", choices=["build", "hyperoval", "check"])
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--points", dest="points_file", help="x:y:z point-set file (check)")
    p.add_argument("--list", action="store_true", help="also print the hyperoval points (hyperoval)")
    p.add_argument("--write-g6", help="write the incidence graph (build)")

    for name, func, help_ in (("expect", cmd_expect, "expected size-t k-DIS count in G(n,p)"),
                              ("montecarlo", cmd_montecarlo, "sampled size-t k-DIS count in G(n,p)")):
        p = add(name, func, help_)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-t", type=int, required=True)
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-p", type=float, required=True)
        if name == "montecarlo":
            p.add_argument("--samples", type=int, default=100000)
            p.add_argument("--seed", type=int, required=True)

    p = add("bounds", cmd_bounds, "growth-rate constants")
    p.add_argument("-k", type=int, required=True)

    p = add("convert", cmd_convert, "graph6 <-> edge list")
    _add_graph_args(p)
    p.add_argument("--to", choices=["g6", "edges"], required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (DomainError, GraphError, NotAForestError, geometry.GeometryError, ValueError, OSError) as exc:
        print(f"kdis: error: {exc}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
