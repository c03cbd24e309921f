"""Command-line front end: ``wuec <subcommand> ...``.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on
success, 1 when the instance is infeasible, a check fails or the budget
runs out, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, Infeasible, InputError, WuecError
from .exact import Budget
from .generators import MODELS, generate
from .graph import is_minimal_edge_cover, star_forest_decompose
from .instance import Instance, emit_instance, parse_instance, read_instance, write_instance
from .reductions import REDUCTIONS, ReductionCertificate, verify_certificate
from .report import ENGINE_PROBLEM, SUITES, bench, format_table, run_engine, run_exact

__all__ = ["main", "build_parser"]

REDUCE_PAIRS = {("is", "bipartite"), ("is", "split"), ("is", "ktree"), ("wssf", "complete")}


class UsageError(Exception):
    pass


def _budget(args):
    return Budget(max_ms=args.budget_ms) if getattr(args, "budget_ms", None) else None


def _emit(obj, out=None):
    text = obj if isinstance(obj, str) else json.dumps(obj)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def _load(args) -> Instance:
    if not args.input:
        raise UsageError("--in is required")
    if args.input == "-":
        return parse_instance(sys.stdin.read())
    return read_instance(args.input)


def _forced(inst):
    return inst.forced_packing() if inst.tag == "extwssf" else None


def cmd_solve(args):
    inst = _load(args)
    rep = run_exact(inst.tag, inst.graph, forced=_forced(inst), budget=_budget(args),
                    instance=args.input)
    _emit(rep.to_json(), args.out)
    return 0 if rep.ok else 1


def cmd_approx(args):
    if args.engine not in ENGINE_PROBLEM:
        raise UsageError(f"unknown engine {args.engine!r}; choose from {', '.join(ENGINE_PROBLEM)}")
    inst = _load(args)
    forced = inst.forced_packing() if args.engine == "ext-wssf-half" else None
    order = inst.order if args.engine == "ktree" else None
    rep = run_engine(args.engine, inst.graph, k=args.k, order=order, forced=forced,
                     oracle=args.oracle, budget=_budget(args), instance=args.input)
    _emit(rep.to_json(), args.out)
    return 0 if rep.ok else 1


def cmd_reduce(args):
    pair = (args.src, args.dst)
    if pair not in REDUCE_PAIRS:
        raise UsageError(f"unsupported reduction {args.src} -> {args.dst}; "
                         f"choose from {', '.join(f'{a}->{b}' for a, b in sorted(REDUCE_PAIRS))}")
    inst = _load(args)
    target, cert = REDUCTIONS[args.dst](inst.graph)
    text = emit_instance(Instance("wuec", target))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.cert:
        with open(args.cert, "w", encoding="utf-8") as fh:
            json.dump(cert.to_dict(), fh)
    _emit({"kind": cert.kind, "identity": cert.identity, "params": cert.params,
           "n": target.n, "m": target.m, "instance": text, "certificate": cert.to_dict()})
    return 0


def _read_solution(path, g):
    """Edge list: JSON ``[[u, v], ...]`` or one ``u v`` pair per line, 1-based."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        pairs = json.loads(text)
        if isinstance(pairs, dict):
            pairs = pairs["witness"]
    except json.JSONDecodeError:
        pairs = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    out = set()
    for p in pairs:
        u, v = int(p[0]) - 1, int(p[1]) - 1
        if not g.has_edge(u, v):
            raise InputError(f"solution edge {u + 1} {v + 1} is not in the graph")
        out.add(g.edge_id(u, v))
    return frozenset(out)


def cmd_verify(args):
    if args.cert:
        with open(args.cert, encoding="utf-8") as fh:
            cert = ReductionCertificate.from_dict(json.load(fh))
        rep = verify_certificate(cert, _budget(args))
        d = rep.to_dict()
        d["verdict"] = "equal" if rep.equal else "violation"
        _emit(d, args.out)
        return 0 if rep.ok else 1
    if not args.solution:
        raise UsageError("verify needs --cert or --in with --solution")
    inst = _load(args)
    g = inst.graph
    sol = _read_solution(args.solution, g)
    if inst.tag == "wuec":
        checks = {"minimal_edge_cover": is_minimal_edge_cover(g, sol)}
    elif inst.tag in ("wssf", "extwssf"):
        checks = {"star_forest": star_forest_decompose(g, sol).edges == sol}
        if inst.tag == "extwssf":
            checks["forced"] = inst.forced <= sol
    else:
        raise UsageError("solutions can only be verified for wuec, wssf and extwssf instances")
    d = {"instance": args.input, "value": g.total(sol), "verdicts": checks}
    if args.oracle:
        d["oracle"] = run_exact(inst.tag, g, forced=_forced(inst), budget=_budget(args)).value
        checks["optimal"] = d["value"] == d["oracle"]
    _emit(d, args.out)
    return 0 if all(checks.values()) else 1


def _param(text):
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    for conv in (int, float):
        try:
            return key, conv(val)
        except ValueError:
            pass
    if "," in val:
        return key, tuple(int(x) for x in val.split(","))
    return key, val


def cmd_gen(args):
    inst = generate(args.model, dict(args.param or []), args.seed)
    if args.out:
        write_instance(args.out, inst)
    else:
        sys.stdout.write(emit_instance(inst))
    return 0


def cmd_bench(args):
    reports = []
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for rep in bench(args.suite, args.seed, args.count, args.jobs):
            sink.write(rep.to_json() + "\n")
            sink.flush()
            reports.append(rep)
    finally:
        if args.out:
            sink.close()
    print(format_table(reports), file=sys.stderr)
    return 0 if all(r.ok for r in reports) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="wuec", description="Weighted upper edge cover toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget=True):
        sp.add_argument("--in", dest="input", help="instance file ('-' for stdin)")
        sp.add_argument("--out", help="write the result here instead of stdout")
        if budget:
            sp.add_argument("--budget-ms", type=float, help="time limit for exact search")

    sp = sub.add_parser("solve", help="exact optimum of an instance")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("approx", help="run an approximation engine")
    common(sp)
    sp.add_argument("--engine", required=True, help=", ".join(ENGINE_PROBLEM))
    sp.add_argument("--k", type=int, help="k for the k-tree engine (inferred if omitted)")
    sp.add_argument("--oracle", action="store_true", help="compare against the exact optimum")
    sp.set_defaults(func=cmd_approx)

    sp = sub.add_parser("reduce", help="build a reduction target and its certificate")
    common(sp, budget=False)
    sp.add_argument("--from", dest="src", required=True, choices=("is", "wssf"))
    sp.add_argument("--to", dest="dst", required=True, choices=tuple(REDUCTIONS))
    sp.add_argument("--cert", help="write the certificate JSON here")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="check a certificate or a solution")
    common(sp)
    sp.add_argument("--cert", help="certificate JSON written by 'reduce'")
    sp.add_argument("--solution", help="edge list to validate against --in")
    sp.add_argument("--oracle", action="store_true", help="also check optimality")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--model", required=True, choices=sorted(MODELS))
    sp.add_argument("--param", type=_param, action="append", metavar="KEY=VALUE")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="run a benchmark suite")
    sp.add_argument("--suite", default="ratios", choices=sorted(SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bench)
    return p


def _fail(code, kind, exc):
    print(json.dumps({"error": kind, "reason": str(exc)}))
    print(f"wuec: {exc}", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        return _fail(2, "usage", exc)
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget", "reason": str(exc), "nodes_explored": exc.nodes_explored}))
        return 1
    except Infeasible as exc:
        return _fail(1, "infeasible", exc)
    except InputError as exc:
        return _fail(2, "input", exc)
    except WuecError as exc:
        return _fail(1, type(exc).__name__, exc)
    except OSError as exc:
        return _fail(2, "io", exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
