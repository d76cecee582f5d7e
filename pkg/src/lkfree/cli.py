"""census-cli: command-line front end for counts, constructions, CSPs and bounds.

Exit codes: 0 success, 2 parameter error, 3 budget abort, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import bounds, constructions, csp, enumerator, table
from .core import HypergraphError, subset_masks
from .freeness import ForbiddenList, is_lk_free

EXIT_OK, EXIT_PARAM, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4
ENV_NODE_BUDGET = "LKFREE_NODE_BUDGET"
ENV_TIME_BUDGET = "LKFREE_TIME_BUDGET"


class Mismatch(Exception):
    pass


def _env_number(name, kind):
    raw = os.environ.get(name)
    return kind(raw) if raw else None


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError("budgets must be positive")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int, default=3)
    common.add_argument("--k", type=int, default=4)
    common.add_argument("--list", default="", help='comma-separated forbidden counts, e.g. "1,4"')
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--node-budget", type=_positive(int), default=None)
    common.add_argument("--time-budget", type=_positive(float), default=None)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None)
    common.add_argument("--canonical", action="store_true", help="omit timing fields")

    p = argparse.ArgumentParser(prog="census-cli", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common])
    c.add_argument("--method", choices=("backtracking", "exhaustive"), default="backtracking")
    sub.add_parser("iso-count", parents=[common])
    sub.add_parser("enumerate", parents=[common])

    c = sub.add_parser("csp", parents=[common])
    c.add_argument("--file")
    c.add_argument("--generator", choices=("extremal", "random", "sweep"))
    c.add_argument("--m", type=int)
    c.add_argument("--instances", type=int, default=1)
    c.add_argument("--assignments", action="store_true")

    c = sub.add_parser("construct", parents=[common])
    c.add_argument("name", choices=("turan", "qn", "steiner", "partite"))
    c.add_argument("--strategy", choices=constructions.STRATEGIES, default="seeded_random")

    c = sub.add_parser("bounds", parents=[common])
    c.add_argument("--formula", default="all",
                   choices=["all"] + [f.value for f in bounds.FormulaId])
    c.add_argument("--i", type=int, default=1)
    c.add_argument("--census", action="store_true",
                   help="compute f(n,r,k,L) and compare it with the bound")

    sub.add_parser("verify-table", parents=[common])

    c = sub.add_parser("d-stats", parents=[common])
    c.add_argument("--a", type=int, default=1)
    c.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    c.add_argument("--samples", type=int, default=64)
    return p


def _budgets(args):
    nb = args.node_budget or _env_number(ENV_NODE_BUDGET, int)
    tb = args.time_budget or _env_number(ENV_TIME_BUDGET, float)
    return nb, tb


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name} is required")


def _list(args):
    return ForbiddenList.parse(args.list, args.k, args.r)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args):
    _need(args, "n")
    nb, tb = _budgets(args)
    rep = enumerator.count_labeled(args.n, args.r, args.k, _list(args), method=args.method,
                                   workers=args.threads, node_budget=nb, time_budget=tb)
    if args.format == "csv":
        return ",".join(rep.CSV_FIELDS) + "\n" + rep.to_csv_row() + "\n"
    return rep.to_json(canonical=args.canonical) + "\n"


def cmd_iso_count(args):
    _need(args, "n")
    nb, tb = _budgets(args)
    rep = enumerator.count_iso_classes(args.n, args.r, args.k, _list(args), workers=args.threads,
                                       node_budget=nb, time_budget=tb)
    if args.format == "csv":
        return ",".join(rep.CSV_FIELDS) + "\n" + rep.to_csv_row() + "\n"
    return rep.to_json(canonical=args.canonical) + "\n"


def cmd_enumerate(args):
    _need(args, "n")
    nb, tb = _budgets(args)
    lines = []
    enumerator.enumerate_free(args.n, args.r, args.k, _list(args),
                              lambda G: lines.append(json.dumps({"bits": str(G.bits), "edges": G.edges()})),
                              workers=args.threads, node_budget=nb, time_budget=tb)
    return "".join(ln + "\n" for ln in lines)


def cmd_csp(args):
    if args.file:
        with open(args.file) as fh:
            instances = [csp.Csp.from_text(fh.read())]
    elif args.generator == "extremal":
        _need(args, "m")
        instances = [csp.extremal_csp(args.m)]
    elif args.generator == "random":
        _need(args, "m")
        rng = random.Random(args.seed)
        instances = [csp.random_csp(args.m, rng) for _ in range(args.instances)]
    elif args.generator == "sweep":
        _need(args, "m")
        instances = csp.all_csps(args.m)
    else:
        raise ValueError("give --file or --generator")
    records, failures, total = [], 0, 0
    worst = 0
    for inst in instances:
        count = csp.count_satisfying(inst)
        total += 1
        worst = max(worst, count)
        ok = count <= inst.m + 1
        failures += not ok
        if args.generator != "sweep":
            rec = {"m": inst.m, "count": count, "bound": inst.m + 1, "verdict": "pass" if ok else "fail"}
            if args.assignments:
                rec["assignments"] = ["".join(map(str, g)) for g in csp.enumerate_satisfying(inst)]
            records.append(rec)
    if args.generator == "sweep":
        records = [{"m": args.m, "instances": total, "max_count": worst, "bound": args.m + 1,
                    "failures": failures, "verdict": "pass" if not failures else "fail"}]
    out = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if failures:
        sys.stdout.write(out)
        raise Mismatch(f"{failures} CSP(s) exceed the m+1 bound")
    return out


def cmd_construct(args):
    _need(args, "n")
    trace = None
    if args.name == "turan":
        G = constructions.turan_cn(args.n)
        L = ForbiddenList(4, 3, {1, 4})
        counts_ok = all(c in (0, 2, 3) for c in _four_set_counts(G))
        verdict = bool(is_lk_free(G, L)) and counts_ok
        predicate = "({1,4},4)-free and every 4-set spans 0, 2 or 3 edges"
    elif args.name == "qn":
        fam, trace = constructions.greedy_linear_transversal(args.n, args.strategy, args.seed)
        G = constructions.qn_member(args.n, fam)
        verdict = bool(is_lk_free(G, ForbiddenList(4, 3, {1, 4})))
        predicate = "({1,4},4)-free"
    elif args.name == "steiner":
        G, trace = constructions.greedy_partial_steiner(args.n, args.r, args.strategy, args.seed)
        verdict = constructions.max_codegree(G) <= 1
        predicate = "every (r-1)-subset lies in at most one edge"
    else:
        G = constructions.complete_r_partite(args.n, args.r)
        L = ForbiddenList(args.r + 1, args.r, set(range(3, args.r + 2)))
        verdict = bool(is_lk_free(G, L))
        predicate = f"({L.label()},{args.r + 1})-free"
    report = {"construction": args.name, "n": args.n, "r": G.r, "edges": G.num_edges(),
              "predicate": predicate, "verdict": "pass" if verdict else "fail",
              "trace": json.loads(trace.to_json()) if trace else None}
    if args.out:
        # hypergraph file at --out, trace beside it, report on stdout
        with open(args.out, "w") as fh:
            fh.write(G.to_text())
        if trace:
            with open(args.out + ".trace.json", "w") as fh:
                fh.write(trace.to_json() + "\n")
        args.out = None
    else:
        report["hypergraph"] = G.to_text()
    text = json.dumps(report, sort_keys=True) + "\n"
    if not verdict:
        sys.stdout.write(text)
        raise Mismatch(f"construction {args.name} failed its predicate")
    return text


def _four_set_counts(G):
    return [(G.bits & m).bit_count() for _, m in subset_masks(G.n, 4, 3)]


def cmd_bounds(args):
    _need(args, "n")
    ids = [f for f in bounds.FormulaId] if args.formula == "all" else [bounds.FormulaId(args.formula)]
    params = {
        bounds.FormulaId.MAIN_UPPER: dict(n=args.n, r=args.r, k=args.k),
        bounds.FormulaId.COROLLARY_D: dict(i=args.i, n=args.n, r=args.r, k=args.k),
        bounds.FormulaId.LINKGRAPH: dict(n=args.n, k=args.k),
        bounds.FormulaId.QN_LOWER: dict(n=args.n),
        bounds.FormulaId.STEINER_LOWER: dict(n=args.n, r=args.r),
        bounds.FormulaId.BARNES_G: dict(n=args.n),
    }
    census = None
    if args.census:
        nb, tb = _budgets(args)
        census = enumerator.count_labeled(args.n, args.r, args.k, _list(args), workers=args.threads,
                                          node_budget=nb, time_budget=tb).labeled_count
    records = []
    for fid in ids:
        try:
            b = bounds.evaluate(fid, **params[fid])
        except bounds.BoundError as exc:
            if args.formula != "all":
                raise
            records.append({"formula_id": fid.value, "error": str(exc)})
            continue
        rec = b.to_dict()
        if census is not None and fid in (bounds.FormulaId.MAIN_UPPER, bounds.FormulaId.BARNES_G):
            rec["census"] = str(census)
            rec["census_within_bound"] = b.admits(census)
        records.append(rec)
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def cmd_verify_table(args):
    nb, _ = _budgets(args)
    rows = table.verify_table(node_budget=nb or table.DEFAULT_NODE_BUDGET, workers=args.threads)
    text = table.rows_to_csv(rows) if args.format == "csv" else table.rows_to_json(rows) + "\n"
    bad = [r for r in rows if not r.ok]
    if bad:
        _emit(args, text)
        raise Mismatch("; ".join(f"{r.L.label()}: {d}" for r in bad for d in r.diagnostics))
    return text


def cmd_d_stats(args):
    _need(args, "n")
    st = enumerator.max_d(args.a, args.n, args.r, args.k, _list(args), mode=args.mode,
                          seed=args.seed, samples=args.samples)
    rec = st.to_dict()
    i = args.r - args.a
    if 1 <= i <= args.r - 1:
        b = bounds.corollary_d_bound(i, args.n, args.r, args.k)
        rec["corollary_bound_log2"] = float(b)
        rec["within_corollary_bound"] = b.admits(st.value)
    if args.a == args.r - 1:
        b = bounds.linkgraph_bound(args.n, args.k)
        rec["linkgraph_bound"] = 2 ** args.k * args.n if args.n > args.k else 2 ** args.k
        rec["within_linkgraph_bound"] = b.admits(st.value)
    return json.dumps(rec, sort_keys=True) + "\n"


COMMANDS = {
    "count": cmd_count,
    "iso-count": cmd_iso_count,
    "enumerate": cmd_enumerate,
    "csp": cmd_csp,
    "construct": cmd_construct,
    "bounds": cmd_bounds,
    "verify-table": cmd_verify_table,
    "d-stats": cmd_d_stats,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAM if exc.code else EXIT_OK
    try:
        text = COMMANDS[args.command](args)
    except enumerator.BudgetExceeded as exc:
        print(f"census-cli: budget abort: {exc} (partial count {exc.partial_count}, "
              f"{exc.nodes} nodes)", file=sys.stderr)
        return EXIT_BUDGET
    except Mismatch as exc:
        print(f"census-cli: verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, HypergraphError, OSError) as exc:
        print(f"census-cli: {exc}", file=sys.stderr)
        return EXIT_PARAM
    _emit(args, text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
