"""Exact (exponential-time) solvers used as ground truth.

``uec_exact``, ``wssf_exact`` and ``ext_wssf_exact`` share one
branch-and-bound over vertex roles: every vertex is eventually a *centre*
or a *leaf*.  Once the roles are fixed, the best leaf-to-centre assignment
is easy: for spanning star forests each leaf takes its heaviest centre, and
for minimal edge covers (no trivial stars) each centre must additionally
receive one leaf, which is an assignment problem.

The bound at a search node is the current role-respecting maximum: each
non-centre vertex contributes its heaviest edge towards a vertex that may
still be a centre.  Centres contribute nothing by themselves.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import BudgetExceeded, Infeasible, InputError
from .graph import (
    ForcedStarPacking,
    WeightedGraph,
    is_minimal_edge_cover,
    star_forest_decompose,
)

__all__ = [
    "SolveReport",
    "Budget",
    "uec_exact",
    "wssf_exact",
    "ext_wssf_exact",
    "gamma_exact",
    "alpha_exact",
    "uec_unweighted",
    "uec_enumerate",
    "wssf_enumerate",
]

_U, _C, _L = 0, 1, 2
_NEG = float("-inf")


@dataclass
class SolveReport:
    problem: str
    value: int
    witness: frozenset
    nodes_explored: int = 0
    runtime_ms: float = 0.0


@dataclass
class Budget:
    """Search limits.  ``cancel`` is any object with ``is_set()``
    (e.g. :class:`threading.Event`)."""

    max_nodes: Optional[int] = None
    max_ms: Optional[float] = None
    cancel: object = None
    nodes: int = 0
    _deadline: float = field(default=0.0, repr=False)

    def start(self):
        self.nodes = 0
        self._deadline = time.perf_counter() + self.max_ms / 1000 if self.max_ms else 0.0
        return self

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exhausted", self.nodes)
        if self.nodes & 255 == 0:
            if self._deadline and time.perf_counter() > self._deadline:
                raise BudgetExceeded(f"time budget of {self.max_ms} ms exhausted", self.nodes)
            if self.cancel is not None and self.cancel.is_set():
                raise BudgetExceeded("search cancelled", self.nodes)


def _budget(budget):
    return (budget if budget is not None else Budget()).start()


class _RoleSearch:
    """Branch-and-bound over centre/leaf roles.

    ``cover=True`` forbids trivial stars (minimal edge covers).
    ``forced`` fixes edges that must be in the forest (spanning star forests
    only).
    """

    def __init__(self, g, cover, forced=frozenset(), budget=None):
        self.g = g
        self.n = g.n
        self.cover = cover
        self.budget = budget
        self.adj = [sorted(((x, g.weight(e)) for x, e in g.incident(v)), key=lambda p: (-p[1], p[0]))
                    for v in range(g.n)]
        self.wt = {}
        for u, v, w in g.edges:
            self.wt[(u, v)] = self.wt[(v, u)] = w
        # forced structure: fixed parents and single-edge partners
        sf = star_forest_decompose(g, forced)
        self.fixed_parent = {}
        self.partner = {}
        self.role = [_U] * g.n
        for c, leaves in sf.star_leaves.items():
            if len(leaves) == 1:
                a = leaves[0]
                self.partner[a] = c
                self.partner[c] = a
            else:
                self.role[c] = _C
                for v in leaves:
                    self.role[v] = _L
                    self.fixed_parent[v] = c
        self.never_center = set(self.fixed_parent)
        self.best = -1
        self.best_parent = None

    # -- evaluation of a complete role assignment ---------------------------

    def _evaluate(self, role):
        """Best leaf -> centre map for fixed roles, or ``None`` if infeasible."""
        parent = {}
        total = 0
        per_center = {}
        for v in range(self.n):
            if role[v] != _L:
                continue
            if v in self.fixed_parent:
                c = self.fixed_parent[v]
            elif v in self.partner and role[self.partner[v]] == _C:
                c = self.partner[v]
            else:
                c = None
                for x, w in self.adj[v]:
                    if role[x] == _C:
                        c = x
                        break
                if c is None:
                    if self.cover:
                        return None
                    continue
            parent[v] = c
            total += self.wt[(v, c)]
            per_center[c] = per_center.get(c, 0) + 1
        if not self.cover:
            return total, parent
        centers = [v for v in range(self.n) if role[v] == _C]
        if all(per_center.get(c, 0) for c in centers):
            return total, parent
        return self._evaluate_cover(role, centers, parent, total)

    def _evaluate_cover(self, role, centers, parent, total):
        # every centre needs one private leaf: min-loss assignment
        leaves = sorted(parent)
        if len(centers) > len(leaves):
            return None
        col = {v: j for j, v in enumerate(leaves)}
        big = 1 + sum(self.wt[(v, parent[v])] for v in leaves) + 1
        cost = np.full((len(centers), len(leaves)), float(big))
        for i, c in enumerate(centers):
            ok = False
            for x, w in self.adj[c]:
                if role[x] == _L:
                    cost[i, col[x]] = self.wt[(x, parent[x])] - w
                    ok = True
            if not ok:
                return None
        rows, cols = linear_sum_assignment(cost)
        if any(cost[r, k] >= big for r, k in zip(rows, cols)):
            return None
        parent = dict(parent)
        for r, k in zip(rows, cols):
            v = leaves[k]
            total -= int(cost[r, k])
            parent[v] = centers[r]
        return total, parent

    # -- bound ---------------------------------------------------------------

    def _bound(self, role):
        ub = 0
        for v in range(self.n):
            if role[v] == _C:
                continue
            if v in self.fixed_parent:
                ub += self.wt[(v, self.fixed_parent[v])]
                continue
            for x, w in self.adj[v]:
                if role[x] != _L and x not in self.never_center:
                    ub += w
                    break
        return ub

    def _locally_feasible(self, role, vs):
        if not self.cover:
            return True
        for y in vs:
            r = role[y]
            if r == _U:
                continue
            need = _C if r == _L else _L
            if not any(role[x] in (need, _U) for x, _ in self.adj[y]):
                return False
        return True

    def _complete(self, role):
        out = list(role)
        for v in range(self.n):
            if out[v] == _U:
                if v in self.partner and out[self.partner[v]] == _U:
                    out[v] = _C
                    out[self.partner[v]] = _L
                elif v in self.partner:
                    out[v] = _C if out[self.partner[v]] == _L else _L
                else:
                    out[v] = _L if any(role[x] == _C for x, _ in self.adj[v]) else _C
        return out

    # -- search --------------------------------------------------------------

    def _set(self, role, v, r):
        """Assign role ``r`` to ``v`` (and its forced partner); return touched vertices."""
        role[v] = r
        touched = [v]
        p = self.partner.get(v)
        if p is not None:
            want = _L if r == _C else _C
            if role[p] not in (_U, want):
                return None
            role[p] = want
            touched.append(p)
        return touched

    def _pick(self, role):
        best_v, best_key = None, None
        for v in range(self.n):
            if role[v] != _U:
                continue
            bp = 0
            for x, w in self.adj[v]:
                if role[x] != _L and x not in self.never_center:
                    bp = w
                    break
            key = (bp, len(self.adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def _record(self, role):
        res = self._evaluate(role)
        if res is not None and res[0] > self.best:
            self.best, self.best_parent = res
        return res

    def _dfs(self, role):
        self.budget.tick()
        ub = self._bound(role)
        if ub <= self.best:
            return
        v = self._pick(role)
        if v is None:
            self._record(role)
            return
        res = self._record(self._complete(role))
        if res is not None and res[0] >= ub:
            return
        for r in (_L, _C):
            saved = list(role)
            touched = self._set(role, v, r)
            if touched is not None:
                nbhd = set(touched)
                for t in touched:
                    nbhd.update(x for x, _ in self.adj[t])
                if self._locally_feasible(role, nbhd):
                    self._dfs(role)
            role[:] = saved

    def run(self):
        self._dfs(list(self.role))
        if self.best_parent is None:
            return None
        return self.best, frozenset(self.g.edge_id(v, c) for v, c in self.best_parent.items())


def _finish(problem, result, budget, t0):
    value, witness = result
    return SolveReport(problem, value, witness, budget.nodes, (time.perf_counter() - t0) * 1000)


def uec_exact(g: WeightedGraph, budget: Optional[Budget] = None) -> SolveReport:
    """Maximum weight of a minimal edge cover of ``g``.

    Raises :class:`Infeasible` when ``g`` has an isolated vertex and
    :class:`BudgetExceeded` when the search is cut short.
    """
    t0 = time.perf_counter()
    iso = g.isolated_vertices()
    if iso:
        raise Infeasible(f"isolated vertex {iso[0]} cannot be covered")
    budget = _budget(budget)
    if g.n == 0:
        return SolveReport("uec", 0, frozenset(), 0, 0.0)
    result = _RoleSearch(g, cover=True, budget=budget).run()
    if result is None:  # pragma: no cover - every isolate-free graph has a cover
        raise Infeasible("no minimal edge cover found")
    return _finish("uec", result, budget, t0)


def wssf_exact(g: WeightedGraph, budget: Optional[Budget] = None) -> SolveReport:
    """Maximum weight of a spanning star forest (trivial stars allowed)."""
    t0 = time.perf_counter()
    budget = _budget(budget)
    result = _RoleSearch(g, cover=False, budget=budget).run()
    return _finish("wssf", result, budget, t0)


def ext_wssf_exact(g: WeightedGraph, u: Optional[ForcedStarPacking] = None,
                   budget: Optional[Budget] = None) -> SolveReport:
    """Maximum spanning star forest containing the forced packing ``u``."""
    t0 = time.perf_counter()
    forced = u.edges if u is not None else frozenset()
    budget = _budget(budget)
    result = _RoleSearch(g, cover=False, forced=forced, budget=budget).run()
    assert result is not None, "a star packing always extends to a spanning star forest"
    assert forced <= result[1]
    return _finish("extwssf", result, budget, t0)


def _masks(g):
    nb = [0] * g.n
    for u, v, _ in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def alpha_exact(g: WeightedGraph, budget: Optional[Budget] = None) -> SolveReport:
    """Maximum independent set size by include/exclude branching."""
    t0 = time.perf_counter()
    budget = _budget(budget)
    nb = _masks(g)
    best = [0, 0]

    def rec(cand, size, chosen):
        budget.tick()
        # vertices of degree <= 1 inside cand are always safe to take
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                if bin(nb[v] & cand).count("1") <= 1:
                    cand &= ~(nb[v] | (1 << v))
                    size += 1
                    chosen |= 1 << v
                    changed = True
                    break
        if size + bin(cand).count("1") <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        v = max(_bits(cand), key=lambda x: (bin(nb[x] & cand).count("1"), -x))
        rec(cand & ~(nb[v] | (1 << v)), size + 1, chosen | (1 << v))
        rec(cand & ~(1 << v), size, chosen)

    rec((1 << g.n) - 1, 0, 0)
    return SolveReport("alpha", best[0], frozenset(_bits(best[1])), budget.nodes,
                       (time.perf_counter() - t0) * 1000)


def gamma_exact(g: WeightedGraph, budget: Optional[Budget] = None) -> SolveReport:
    """Minimum dominating set size: branch on who dominates the first
    undominated vertex."""
    t0 = time.perf_counter()
    budget = _budget(budget)
    closed = [m | (1 << v) for v, m in enumerate(_masks(g))]
    full = (1 << g.n) - 1
    reach = max((bin(c).count("1") for c in closed), default=1)
    best = [g.n, full]

    def rec(dom, size, chosen):
        budget.tick()
        if dom == full:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        missing = bin(full & ~dom).count("1")
        if size + -(-missing // reach) >= best[0]:
            return
        u = (full & ~dom & -(full & ~dom)).bit_length() - 1
        opts = sorted(_bits(closed[u]), key=lambda x: (-bin(closed[x] & ~dom).count("1"), x))
        for x in opts:
            rec(dom | closed[x], size + 1, chosen | (1 << x))

    rec(0, 0, 0)
    return SolveReport("gamma", best[0], frozenset(_bits(best[1])), budget.nodes,
                       (time.perf_counter() - t0) * 1000)


def uec_unweighted(g: WeightedGraph, budget: Optional[Budget] = None) -> int:
    """Unweighted upper edge cover number via ``n - gamma``."""
    if g.isolated_vertices():
        raise Infeasible("identity needs an isolated-vertex-free graph")
    return g.n - gamma_exact(g, budget).value


# -- plain enumeration over edge subsets, kept independent of the search ----

_ENUM_LIMIT = 20


def _subsets(g):
    if g.m > _ENUM_LIMIT:
        raise BudgetExceeded(f"subset enumeration limited to {_ENUM_LIMIT} edges, graph has {g.m}")
    for r in range(g.m + 1):
        yield from combinations(range(g.m), r)


def uec_enumerate(g: WeightedGraph) -> SolveReport:
    """Brute force over all edge subsets (small graphs only)."""
    if g.isolated_vertices():
        raise Infeasible("isolated vertex")
    best = None
    for s in _subsets(g):
        if is_minimal_edge_cover(g, s):
            w = g.total(s)
            if best is None or w > best[0]:
                best = (w, frozenset(s))
    if best is None:
        raise InputError("no minimal edge cover")  # pragma: no cover
    return SolveReport("uec", best[0], best[1])


def wssf_enumerate(g: WeightedGraph, forced=frozenset()) -> SolveReport:
    """Brute force over all edge subsets containing ``forced``."""
    best = None
    for s in _subsets(g):
        if not forced <= set(s):
            continue
        try:
            star_forest_decompose(g, s)
        except InputError:
            continue
        w = g.total(s)
        if best is None or w > best[0]:
            best = (w, frozenset(s))
    return SolveReport("wssf", best[0], best[1])
