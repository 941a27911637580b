"""Command line: ``signedgraphs gen|analyze|verify|search|harness``.

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 a search
budget ran out.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import random
import sys
import time
from pathlib import Path

from . import io as gio
from . import verify
from .coloring import DEFAULT_BUDGET, BudgetExhausted, balanced_chromatic_number
from .core import GraphError, is_balanced, negative_girth, radius_in
from .kneser import (
    kneser_signed,
    lower_bound_witness,
    reduce_double_switching,
    schrijver_signed,
)
from .mycielski import all_negative_clique, fig13, generalized_mycielskian, negative_cycle_graph
from .search import FAMILIES, lambda_s_harness, n_s_search, rows_to_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
GEN_KINDS = (
    "kneser", "schrijver", "reduced-kneser", "reduced-schrijver",
    "lower-bound", "mycielski", "fig13", "negclique", "negcycle",
)


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for '{args.kind}'")


def build(args):
    kind = args.kind
    if kind in ("kneser", "reduced-kneser", "schrijver", "reduced-schrijver"):
        _need(args, "n", "k")
        if kind.endswith("kneser"):
            G = kneser_signed(args.n, args.k)
        else:
            G = schrijver_signed(args.n, args.k, alternation=args.alternation)
        return reduce_double_switching(G) if kind.startswith("reduced") else G
    if kind == "lower-bound":
        _need(args, "p", "target")
        return lower_bound_witness(args.p, args.target).graph
    if kind == "mycielski":
        _need(args, "m")
        base = negative_cycle_graph(args.cycle)
        return generalized_mycielskian(base, args.m, args.apex, args.cross)
    if kind == "fig13":
        return fig13()
    if kind == "negclique":
        if args.p is None and args.n is None:
            raise UsageError("negclique needs -p (gives K_{2p-1}) or -n")
        return all_negative_clique(args.n if args.n is not None else 2 * args.p - 1)
    if kind == "negcycle":
        _need(args, "n")
        return negative_cycle_graph(args.n)
    raise UsageError(f"unknown kind {kind}")


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def emit(report: dict, as_json: bool, out=None):
    out = out or sys.stdout
    report = _jsonable(report)
    if as_json:
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    for key, value in report.items():
        if key == "checks":
            for line in value:
                out.write(f"  {line}\n")
        elif isinstance(value, (dict, list)):
            out.write(f"{key}: {json.dumps(value, sort_keys=True)}\n")
        else:
            out.write(f"{key}: {value}\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    G = build(args)
    text = gio.dumps(G, comments=[f"signedgraphs gen {args.kind}"])
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        emit({"command": "gen", "kind": args.kind, "vertices": G.n, "edges": len(G.edges), "path": args.out}, args.json)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    text = Path(args.graph).read_text(encoding="utf-8")
    G = gio.loads(text)
    t0 = time.perf_counter()
    report = {
        "command": f"analyze {args.which}",
        "input_sha256": hashlib.sha256(text.encode()).hexdigest(),
        "vertices": G.n,
        "edges": len(G.edges),
    }
    status = EXIT_OK
    if args.which == "balance":
        r = is_balanced(G)
        report["balanced"] = r.balanced
        if r.balanced:
            report["switching"] = sorted(r.switching)
        else:
            report["cycle"] = list(r.cycle.vertices)
            report["cycle_signs"] = list(r.cycle.signs)
        report["witness_valid"] = r.validate(G)
    elif args.which == "girth":
        g = negative_girth(G, args.threads)
        report["negative_girth"] = g.length
        if g.finite:
            report["cycle"] = list(g.witness.vertices)
            report["cycle_signs"] = list(g.witness.signs)
            report["witness_valid"] = g.witness.validate(G)
    elif args.which == "chib":
        r = balanced_chromatic_number(G, args.budget)
        report.update(chi_b=r.value, lower=r.lower, upper=r.upper, complete=r.complete, nodes=r.nodes)
        report["coloring"] = list(r.coloring.colors)
        report["coloring_valid"] = r.coloring.validate(G)
        if not r.complete:
            status = EXIT_BUDGET
    elif args.which == "radius":
        report["radius"] = radius_in(G, range(G.n)) if G.n else None
    report["budget_status"] = "exhausted" if status == EXIT_BUDGET else "ok"
    report["seconds"] = round(time.perf_counter() - t0, 3)
    emit(report, args.json)
    return status


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    which = args.which
    if which == "lemma21":
        checks = verify.lemma21(args.nmax or 7, args.threads)
    elif which == "oracles":
        checks = verify.oracles(args.n or 4, args.cases or 500, seed=args.seed)
    elif which == "invariance":
        checks = verify.invariance(args.cases or 200, seed=args.seed)
    elif which == "witnesses":
        checks = verify.shift_witnesses(args.nmax or 9)
    else:
        checks = verify.SUITES[which]()
    failed = [c for c in checks if not (c.passed or c.info)]
    report = {
        "command": f"verify {which}",
        "checks": [c.line() for c in checks],
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    if args.json:
        report["checks"] = [
            {"name": c.name, "status": c.status, "detail": c.detail} for c in checks
        ]
    emit(report, args.json)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    rep = n_s_search(args.lam, args.p, args.nmax, args.budget, args.checkpoint)
    if args.csv:
        Path(args.csv).write_text(rep.to_csv(), encoding="utf-8")
    report = {
        "command": f"search lam={args.lam} p={args.p} nmax={args.nmax}",
        "n_s": rep.n_s,
        "n_s_at_least": rep.lower_bound,
        "exhaustive": rep.exhaustive,
        "levels": [
            {"n": lv.n, "classes": lv.classes, "status": lv.status, "witnesses": [w.decode() for w in lv.witnesses]}
            for lv in rep.levels
        ],
        "nodes": rep.nodes,
        "budget_status": "ok" if rep.exhaustive else "exhausted",
        "seconds": round(time.perf_counter() - t0, 3),
    }
    emit(report, args.json)
    return EXIT_OK if rep.exhaustive else EXIT_BUDGET


def cmd_harness(args) -> int:
    rows = lambda_s_harness(args.family, args.p)
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    bad = [r for r in rows if "below-low" in r["status"] or "above-high" in r["status"]]
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED, help="seed for randomised checks")
    common.add_argument("--threads", type=int, default=1, help="worker processes for girth searches")

    ap = argparse.ArgumentParser(prog="signedgraphs", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a generated graph")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("-n", type=int)
    g.add_argument("-k", type=int)
    g.add_argument("-p", type=int)
    g.add_argument("-m", type=int, help="levels of the Mycielskian")
    g.add_argument("--target", type=int, help="vertex count for lower-bound")
    g.add_argument("--cycle", type=int, default=4, help="length of the negative base cycle (mycielski)")
    g.add_argument("--apex", choices=("positive", "negative"), default="positive")
    g.add_argument("--cross", choices=("inherit", "positive"), default="inherit")
    g.add_argument("--alternation", choices=("linear", "cyclic"), default="linear")
    g.add_argument("-o", "--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", parents=[common], help="analyse a graph file")
    a.add_argument("graph")
    a.add_argument("which", choices=("balance", "girth", "chib", "radius"))
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("which", choices=sorted(verify.SUITES))
    v.add_argument("--nmax", type=int)
    v.add_argument("--n", type=int, help="exhaustive size for oracles")
    v.add_argument("--cases", type=int)
    v.add_argument("--corpus", choices=("default",), default="default")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="exhaustive n_s(lam, p) search")
    s.add_argument("--lam", type=int, required=True)
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--checkpoint")
    s.add_argument("--csv", help="write the per-n CSV report here")
    s.set_defaults(func=cmd_search)

    h = sub.add_parser("harness", parents=[common], help="girth against both bounds (CSV)")
    h.add_argument("family", choices=FAMILIES)
    h.add_argument("-p", type=int, required=True)
    h.add_argument("-o", "--out")
    h.set_defaults(func=cmd_harness)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
