"""Command line entry point.

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, cover, domsolve, harness
from .graph import GraphError, read_graph, write_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read(path):
    with open(path) as fh:
        return fh.read()


def cmd_dom(args) -> int:
    g = read_graph(args.input)
    cert = domsolve.domination_number(g, args.kind, args.budget)
    _emit(cert.to_dict())
    return EXIT_OK


def cmd_greedy(args) -> int:
    g = read_graph(args.input)
    trace = domsolve.greedy_dominating_set(g)
    _emit({
        "order": list(trace.order),
        "white_counts": list(trace.white_counts),
        "set": list(trace.final_set),
        "value": len(trace.final_set),
    })
    return EXIT_OK


def cmd_lift(args) -> int:
    base = read_graph(args.base)
    if args.voltages:
        va = cover.parse_voltages(_read(args.voltages), base)
        if va.k != args.k:
            raise cover.CoverError(f"voltage file has fold {va.k}, --k says {args.k}")
    else:
        va = cover.random_voltages(base, args.k, args.seed)
    G, p = cover.lift(va)
    write_graph(G, args.out)
    with open(args.proj_out, "w") as fh:
        fh.write(cover.format_projection(p))
    _emit({"n_total": G.n, "m_total": G.m, "k": p.k, "components": len(G.components())})
    return EXIT_OK


def _load_cover(args):
    F = read_graph(args.base)
    G = read_graph(args.total)
    return F, G, cover.parse_projection(_read(args.proj), G, F)


def cmd_verify_cover(args) -> int:
    _, _, p = _load_cover(args)
    v = cover.verify_projection(p)
    _emit({"ok": v.ok, "reason": v.reason, "vertex": v.vertex, "k": p.k})
    return EXIT_OK if v.ok else EXIT_FAIL


def cmd_bounds(args) -> int:
    F, G, p = _load_cover(args)
    v = cover.verify_projection(p)
    if not v:
        _emit({"ok": False, "reason": v.reason})
        return EXIT_FAIL
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    reports = bounds.check_sandwich(F, G, p, kinds, args.budget)
    _emit({"reports": [r.to_dict() for r in reports], "ok": all(r.ok for r in reports)})
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_hunt(args) -> int:
    base = read_graph(args.base)
    records = harness.ratio_experiment(
        base, args.k, args.trials, args.seed, args.budget, workers=args.workers, stamp=args.stamp
    )
    harness.persist(records, args.out)
    cubic = base.min_degree == base.max_degree == 3
    events = [e for r in records for e in harness.record_violations(r, cubic)]
    summary = harness.summarize(records)
    summary["research_events"] = events
    _emit(summary)
    return EXIT_OK if not events else EXIT_FAIL


def cmd_fixtures(args) -> int:
    if args.write:
        fx = harness.fixture(args.write)
        os.makedirs(args.dir, exist_ok=True)
        stem = os.path.join(args.dir, args.write)
        if isinstance(fx, tuple):
            F, G, p = fx
            write_graph(F, stem + ".base.g6")
            write_graph(G, stem + ".total.g6")
            with open(stem + ".proj.txt", "w") as fh:
                fh.write(cover.format_projection(p))
        else:
            write_graph(fx, stem + ".g6")
        return EXIT_OK
    for name in harness.FIXTURES:
        print(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coverdom", description="Domination parameters of graph covers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dom", help="exact domination number of a graph")
    p.add_argument("--kind", choices=domsolve.KINDS, default="plain")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_dom)

    p = sub.add_parser("greedy", help="run the greedy dominating-set algorithm")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("lift", help="build a k-fold cover from voltages")
    p.add_argument("--base", required=True)
    p.add_argument("--k", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--voltages")
    src.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--proj-out", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify-cover", help="check a covering projection")
    p.add_argument("--base", required=True)
    p.add_argument("--total", required=True)
    p.add_argument("--proj", required=True)
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser("bounds", help="solve both sides of a cover and check every bound")
    p.add_argument("--base", required=True)
    p.add_argument("--total", required=True)
    p.add_argument("--proj", required=True)
    p.add_argument("--kinds", default="plain,total,connected")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("hunt", help="random-cover ratio experiment")
    p.add_argument("--base", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--stamp", action="store_true", help="add UTC timestamps to records")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("fixtures", help="list or export the named fixtures")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--write", metavar="NAME")
    p.add_argument("--dir", default=".")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, cover.CoverError, domsolve.SolverError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
