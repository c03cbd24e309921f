"""Run reports (one JSON object per instance) and the benchmark suites."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from . import approx, exact
from .errors import InputError
from .generators import generate
from .graph import (
    ForcedStarPacking,
    StarForest,
    WeightedGraph,
    is_minimal_edge_cover,
    star_forest_decompose,
)
from .reductions import REDUCTIONS, verify_certificate

__all__ = ["RunReport", "ratio", "run_engine", "run_exact", "bench", "SUITES", "format_table"]


@dataclass
class RunReport:
    instance: str
    algorithm: str
    value: int
    witness: list
    guarantee: Optional[str] = None
    oracle: Optional[int] = None
    ratio: Optional[float] = None
    runtime_ms: float = 0.0
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.verdicts.values())

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=False)


def ratio(value, oracle):
    """``value / oracle``; a zero optimum forces a zero value and ratio 1."""
    if oracle == 0:
        if value != 0:
            raise ValueError("positive value against a zero optimum")
        return 1.0
    return value / oracle


def witness_pairs(g: WeightedGraph, eids):
    """1-based endpoint pairs in edge-id order."""
    return [[g.edges[e][0] + 1, g.edges[e][1] + 1] for e in sorted(eids)]


ENGINE_PROBLEM = {
    "wssf-half": "wssf",
    "ext-wssf-half": "extwssf",
    "complete": "uec",
    "ktree": "uec",
    "bounded-degree": "uec",
}


def infer_k(g: WeightedGraph):
    """``k`` such that a ``k``-tree on ``g.n`` vertices has ``g.m`` edges."""
    for k in range(1, max(g.n, 1)):
        if k * g.n - k * (k + 1) // 2 == g.m:
            return k
    raise InputError(f"no k-tree on {g.n} vertices has {g.m} edges; pass --k")


def _oracle(problem, g, forced, budget):
    if problem == "uec":
        return exact.uec_exact(g, budget).value
    if problem == "wssf":
        return exact.wssf_exact(g, budget).value
    return exact.ext_wssf_exact(g, forced, budget).value


def run_engine(name, g, *, k=None, order=None, forced=None, oracle=False,
               budget=None, instance="-") -> RunReport:
    """Run approximation engine ``name`` and validate its output.

    Verdicts: ``valid`` (minimal edge cover, or star forest containing the
    forced edges) and, with an oracle, ``guarantee`` (value at least the
    promised fraction of the optimum).
    """
    if name not in ENGINE_PROBLEM:
        raise InputError(f"unknown engine {name!r}; choose from {', '.join(ENGINE_PROBLEM)}")
    t0 = time.perf_counter()
    if name == "wssf-half":
        out = approx.wssf_half_approx(g)
    elif name == "ext-wssf-half":
        out = approx.ext_wssf_half_approx(g, forced or ForcedStarPacking(g, frozenset()))
    elif name == "complete":
        out = approx.uec_complete_approx(g)
    elif name == "ktree":
        k = k if k is not None else infer_k(g)
        out = approx.uec_ktree_approx(g, k, order)
    else:
        out = approx.uec_bounded_degree_approx(g)
    ms = (time.perf_counter() - t0) * 1000
    g_frac = approx.guarantee(name, g, k)
    verdicts = {}
    if isinstance(out, StarForest):
        valid = star_forest_decompose(g, out.edges).edges == out.edges
        if forced is not None:
            valid = valid and forced.edges <= out.edges
    else:
        valid = is_minimal_edge_cover(g, out.edges)
    verdicts["valid"] = bool(valid)
    rep = RunReport(instance, name, g.total(out.edges), witness_pairs(g, out.edges),
                    str(g_frac), runtime_ms=round(ms, 3), verdicts=verdicts)
    if oracle:
        opt = _oracle(ENGINE_PROBLEM[name], g, forced, budget)
        rep.oracle = opt
        rep.ratio = ratio(rep.value, opt)
        verdicts["guarantee"] = Fraction(rep.value) >= g_frac * opt
    return rep


def run_exact(tag, g, *, forced=None, budget=None, instance="-") -> RunReport:
    """Exact oracle for the problem tag of an instance file."""
    if tag == "wuec":
        sol = exact.uec_exact(g, budget)
        verdicts = {"valid": is_minimal_edge_cover(g, sol.witness)}
    elif tag == "wssf":
        sol = exact.wssf_exact(g, budget)
        verdicts = {}
    elif tag == "extwssf":
        sol = exact.ext_wssf_exact(g, forced, budget)
        verdicts = {"forced": forced is None or forced.edges <= sol.witness}
    elif tag == "is":
        sol = exact.alpha_exact(g, budget)
        return RunReport(instance, "alpha-exact", sol.value, sorted(v + 1 for v in sol.witness),
                         runtime_ms=round(sol.runtime_ms, 3), verdicts={})
    else:
        raise InputError(f"unknown problem tag {tag!r}")
    return RunReport(instance, f"{sol.problem}-exact", sol.value, witness_pairs(g, sol.witness),
                     runtime_ms=round(sol.runtime_ms, 3), verdicts=verdicts)


# -- benchmark suites -------------------------------------------------------

def _ratio_jobs(seed, count):
    jobs = []
    for i in range(count):
        s = seed + i
        jobs.append(("wssf-half", "connected", {"n": 3 + s % 6, "p": 0.4}, s))
        jobs.append(("complete", "complete", {"n": 2 + s % 6}, s))
        jobs.append(("ktree", "ktree", {"k": 2 + s % 2, "n": 5 + s % 6, "weights": "trivalued"}, s))
        jobs.append(("bounded-degree", "bounded-degree", {"n": 4 + s % 7, "delta": 2 + s % 3}, s))
    return jobs


def _identity_jobs(seed, count):
    jobs = []
    for i in range(count):
        s = seed + i
        jobs.append(("bipartite", "connected", {"n": 2 + s % 3, "p": 0.3, "weights": "unit"}, s))
        jobs.append(("split", "connected", {"n": 2 + s % 2, "p": 0.3, "weights": "unit"}, s))
        jobs.append(("ktree", "connected", {"n": 3 + s % 2, "p": 0.3, "weights": "unit"}, s))
        jobs.append(("complete", "connected", {"n": 2 + s % 5, "p": 0.4}, s))
    return jobs


SUITES = {"ratios": _ratio_jobs, "identities": _identity_jobs}


def _run_ratio(job):
    engine, model, params, seed = job
    inst = generate(model, params, seed)
    name = f"{model}-{'-'.join(f'{k}{v}' for k, v in params.items())}-s{seed}"
    order = inst.order if engine == "ktree" else None
    k = params.get("k")
    return run_engine(engine, inst.graph, k=k, order=order, oracle=True, instance=name)


def _run_identity(job):
    kind, model, params, seed = job
    g = generate(model, params, seed).graph
    name = f"{kind}-{model}-n{params['n']}-s{seed}"
    t0 = time.perf_counter()
    _, cert = REDUCTIONS[kind](g)
    rep = verify_certificate(cert)
    return RunReport(name, f"reduce-{kind}", rep.rhs, [], None, rep.lhs,
                     ratio(rep.rhs, rep.lhs) if rep.equal else None,
                     round((time.perf_counter() - t0) * 1000, 3),
                     {"identity": rep.equal, "class": rep.class_ok, "alphabet": rep.alphabet_ok})


RUNNERS = {"ratios": _run_ratio, "identities": _run_identity}


def bench(suite, seed=0, count=10, jobs=1):
    """Yield one :class:`RunReport` per generated instance, in job order."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    work = SUITES[suite](seed, count)
    run = RUNNERS[suite]
    if jobs <= 1:
        for job in work:
            yield run(job)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(run, work)


def format_table(reports):
    """Per-algorithm summary: count, min/mean ratio, failures."""
    rows = {}
    for r in reports:
        row = rows.setdefault(r.algorithm, {"n": 0, "ratios": [], "fail": 0})
        row["n"] += 1
        if r.ratio is not None:
            row["ratios"].append(r.ratio)
        if not r.ok:
            row["fail"] += 1
    lines = [f"{'algorithm':<18}{'runs':>6}{'min ratio':>11}{'mean ratio':>12}{'failures':>10}"]
    for alg, row in rows.items():
        rs = row["ratios"]
        lo = f"{min(rs):.3f}" if rs else "-"
        mean = f"{sum(rs) / len(rs):.3f}" if rs else "-"
        lines.append(f"{alg:<18}{row['n']:>6}{lo:>11}{mean:>12}{row['fail']:>10}")
    return "\n".join(lines)
