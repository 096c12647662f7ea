"""Command-line surface: gen, solve, verify, bounds, bipartition,
extremal, edges, scan.

Exit statuses: 0 success, 1 domain failure (bad input content, invalid
coloring, heuristic non-success), 2 usage error, 3 budget exhausted.
Output is deterministic for fixed inputs and flags: records print as
"key: value" lines, or as one JSON document under --json; wall-clock
times are never part of the output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .bipartition import bipartition_4regular, bipartition_clique, bipartition_girth
from .bounds import bounds_report
from .coloring import parse_coloring, verify_majority
from .edges import _McCache, edge_deltas, edge_stability
from .exact import DEFAULT_BUDGET
from .extremal import max_edges, min_edges, witness_max, witness_min
from .generators import FAMILY_PARAMS, FamilySpec, gen_named, parse_family_tag
from .graph import emit_graph, graph_comments, parse_corpus, parse_graph
from .edges import conjecture_scan
from .solve import solve_graph


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _emit(record: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_graph(path: str):
    text = _read(path)
    g = parse_graph(text)
    spec = None
    for comment in graph_comments(text):
        spec = parse_family_tag(comment)
        if spec is not None:
            break
    return g, spec


def _cmd_gen(args) -> int:
    family = args.family
    if family not in FAMILY_PARAMS:
        raise _UsageError("unknown family %r; known: %s"
                          % (family, " ".join(sorted(FAMILY_PARAMS))))
    names = FAMILY_PARAMS[family]
    positional = [n for n in names if n != "seed"]
    if len(args.params) != len(positional):
        raise _UsageError("family %r takes parameters %s"
                          % (family, " ".join(positional) or "(none)"))
    values = dict(zip(positional, args.params))
    if "seed" in names:
        if args.seed is None:
            raise _UsageError("family %r needs an explicit --seed" % family)
        values["seed"] = args.seed
    spec = FamilySpec(family, tuple(values[n] for n in names))
    g = gen_named(spec)
    text = emit_graph(g, comments=[spec.tag()])
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    g, spec = _load_graph(args.file)
    used, res = solve_graph(g, method=args.method, spec=spec,
                            budget=args.budget, workers=args.workers)
    record = {
        "method": used,
        "value": res.value,
        "status": res.status,
        "upper_bound": res.upper_bound,
        "nodes": res.stats.nodes,
    }
    lines = ["method: %s" % used,
             "value: %d" % res.value,
             "status: %s" % res.status,
             "upper_bound: %d" % res.upper_bound,
             "nodes: %d" % res.stats.nodes]
    if res.witness is not None:
        record["colors"] = res.witness.k
        record["witness"] = res.witness.to_line()
        lines.append("colors: %d" % res.witness.k)
        lines.append("witness: %s" % res.witness.to_line())
    cut = getattr(res, "cut", None)
    if cut is not None:
        cut_text = " ".join("%d-%d" % e for e in sorted(cut.edges))
        record["cut"] = cut_text
        lines.append("cut: %s" % cut_text)
    _emit(record, args.json, lines)
    return 3 if res.status == "budget_exhausted" else 0


def _cmd_verify(args) -> int:
    g, _ = _load_graph(args.graph)
    coloring = parse_coloring(_read(args.coloring), g.n)
    verdict = verify_majority(g, coloring)
    record = {"valid": verdict.valid, "colors": coloring.k}
    lines = ["valid: %s" % ("true" if verdict.valid else "false"),
             "colors: %d" % coloring.k]
    if not verdict.valid:
        record["violations"] = [
            {"vertex": v.vertex, "same": v.same, "other": v.other}
            for v in verdict.violations]
        for v in verdict.violations:
            lines.append("violation: vertex=%d same=%d other=%d"
                         % (v.vertex, v.same, v.other))
    _emit(record, args.json, lines)
    return 0 if verdict.valid else 1


def _cmd_bounds(args) -> int:
    g, spec = _load_graph(args.file)
    report = bounds_report(g, spec)
    record = {"n": g.n, "m": g.m, "entries": []}
    lines = ["n: %d" % g.n, "m: %d" % g.m]
    for e in report.entries:
        record["entries"].append({
            "name": e.name, "applicable": e.applicable, "reason": e.reason,
            "value": e.value, "kind": e.kind})
        if e.applicable:
            lines.append("%s: %d (%s)" % (e.name, e.value, e.kind))
        else:
            lines.append("%s: not applicable (%s)" % (e.name, e.reason))
    _emit(record, args.json, lines)
    return 0


def _cmd_bipartition(args) -> int:
    g, _ = _load_graph(args.file)
    run = {"clique": bipartition_clique, "girth": bipartition_girth,
           "4reg": bipartition_4regular}[args.strategy]
    res = run(g)
    record = {"strategy": args.strategy, "status": res.status,
              "guaranteed": res.guaranteed}
    lines = ["strategy: %s" % args.strategy,
             "status: %s" % res.status,
             "guaranteed: %s" % ("true" if res.guaranteed else "false")]
    if res.reason:
        record["reason"] = res.reason
        lines.append("reason: %s" % res.reason)
    if res.trace is not None:
        record["seed"] = list(res.trace.seed)
        record["moves"] = [[m.vertex, m.boundary_delta] for m in res.trace.moves]
        record["final_side"] = list(res.trace.final_side)
        record["boundary_sizes"] = list(res.trace.boundary_sizes)
        lines.append("seed: %s" % " ".join(map(str, res.trace.seed)))
        lines.append("moves: %s" % (" ".join(
            "%d(%+d)" % (m.vertex, m.boundary_delta)
            for m in res.trace.moves) or "none"))
        lines.append("final_side: %s" % " ".join(map(str, res.trace.final_side)))
        lines.append("boundary_sizes: %s"
                     % " ".join(map(str, res.trace.boundary_sizes)))
    if res.coloring is not None:
        record["witness"] = res.coloring.to_line()
        lines.append("witness: %s" % res.coloring.to_line())
    _emit(record, args.json, lines)
    return 0 if res.status == "success" else 1


def _cmd_extremal(args) -> int:
    if args.kind == "M":
        value = max_edges(args.n, args.k)
        witness = witness_max if args.witness else None
    else:
        value = min_edges(args.n, args.k)
        witness = witness_min if args.witness else None
    if witness is not None:
        w = witness(args.n, args.k)
        sys.stdout.write(emit_graph(w.graph, comments=[w.spec.tag()]))
        return 0
    record = {"kind": args.kind, "n": args.n, "k": args.k, "value": value}
    _emit(record, args.json,
          ["kind: %s" % args.kind, "n: %d" % args.n, "k: %d" % args.k,
           "value: %d" % value])
    return 0


def _cmd_edges(args) -> int:
    g, _ = _load_graph(args.file)
    cache = _McCache(g, args.budget, args.workers)
    report = edge_deltas(g, budget=args.budget, workers=args.workers,
                         cache=cache)
    if g.m > 0:
        stability = edge_stability(g, limit=args.stability_limit,
                                   budget=args.budget, workers=args.workers,
                                   cache=cache)
        report = replace(report, stability=stability)
    record = {
        "base_mc": report.base_mc,
        "critical": report.critical,
        "profile": report.profile,
        "edges": [{"edge": list(d.edge), "mc_after": d.mc_after,
                   "delta": d.delta} for d in report.deltas],
    }
    lines = ["base_mc: %d" % report.base_mc]
    for d in report.deltas:
        lines.append("edge %d-%d: mc_after=%d delta=%+d"
                     % (d.edge[0], d.edge[1], d.mc_after, d.delta))
    lines.append("critical: %s" % ("true" if report.critical else "false"))
    lines.append("profile: %s" % report.profile)
    if report.stability is not None:
        s = report.stability
        record["es_mc"] = s.value
        record["es_status"] = s.status
        if s.status == "exact":
            witness_text = " ".join("%d-%d" % e for e in s.witness_set)
            record["es_witness"] = witness_text
            lines.append("es_mc: %d (removal set %s)" % (s.value, witness_text))
        else:
            lines.append("es_mc: %s (limit %d)" % (s.status, s.limit))
    _emit(record, args.json, lines)
    return 0


def _cmd_scan(args) -> int:
    graphs = parse_corpus(_read(args.corpus))
    outcome = conjecture_scan(graphs, budget=args.budget, workers=args.workers)
    record = {
        "graphs": len(graphs),
        "checked": outcome.checked,
        "skipped": list(outcome.skipped),
        "hits": [],
    }
    lines = ["graphs: %d" % len(graphs),
             "checked: %d" % outcome.checked,
             "skipped: %s" % (" ".join(map(str, outcome.skipped)) or "none")]
    for hit in outcome.hits:
        deltas = [{"edge": list(d.edge), "mc_after": d.mc_after,
                   "delta": d.delta} for d in hit.report.deltas]
        record["hits"].append({"index": hit.index,
                               "base_mc": hit.report.base_mc,
                               "deltas": deltas})
        lines.append("hit: graph %d base_mc=%d profile=%s"
                     % (hit.index, hit.report.base_mc, hit.report.profile))
        for d in hit.report.deltas:
            lines.append("  edge %d-%d: delta=%+d"
                         % (d.edge[0], d.edge[1], d.delta))
    if not outcome.hits:
        lines.append("hits: none")
    _emit(record, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majoritycc",
        description="Majority coloring number toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="emit a named family instance")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None,
                   help="required for randomized families")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="compute mc of a graph file")
    p.add_argument("file")
    p.add_argument("--method", choices=["auto", "exact", "tree", "formula"],
                   default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="report bounds and closed forms")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("bipartition", help="run a 2-coloring heuristic")
    p.add_argument("file")
    p.add_argument("--strategy", choices=["clique", "girth", "4reg"],
                   default="clique")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bipartition)

    p = sub.add_parser("extremal", help="extremal edge counts and witnesses")
    p.add_argument("kind", choices=["M", "m"])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("edges", help="edge-deletion report")
    p.add_argument("file")
    p.add_argument("--stability-limit", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_edges)

    p = sub.add_parser("scan", help="scan a corpus for mixed-profile critical graphs")
    p.add_argument("corpus")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
