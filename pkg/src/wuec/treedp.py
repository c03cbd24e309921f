"""Linear-time maximum spanning star forest on forests.

Each component is rooted at its smallest vertex.  For a vertex ``v`` the
dynamic program keeps the best weight of ``v``'s subtree in four situations:

``CENTER``      ``v`` is a centre (possibly with no leaf, i.e. trivial) and
                the edge to its parent is unused;
``CENTER_UP``   ``v`` is a centre whose parent hangs on it as a leaf -- the
                subtree value equals ``CENTER``, the parent adds the edge;
``LEAF_UP``     ``v`` is a leaf of its parent, so no child edge is used;
``RESOLVED``    ``v`` is a leaf of exactly one child, parent edge unused.

Forced edges must be taken, which removes the "edge unused" option for
the child below them.
"""

from __future__ import annotations

import time
from typing import Optional

from .errors import NotAForest
from .exact import SolveReport
from .graph import ForcedStarPacking, WeightedGraph

__all__ = ["wssf_tree_dp", "is_forest"]

_NEG = float("-inf")


def is_forest(g: WeightedGraph) -> bool:
    return g.m == g.n - len(g.components())


def wssf_tree_dp(g: WeightedGraph, forced: Optional[ForcedStarPacking] = None) -> SolveReport:
    t0 = time.perf_counter()
    if not is_forest(g):
        raise NotAForest("graph contains a cycle")
    locked = forced.edges if forced is not None else frozenset()

    parent = [-1] * g.n
    up_edge = [-1] * g.n
    order = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            order.append(x)
            for y, e in g.incident(x):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    up_edge[y] = e
                    stack.append(y)
    children = [[] for _ in range(g.n)]
    for v in order:
        if parent[v] >= 0:
            children[parent[v]].append(v)

    center = [0] * g.n
    leaf_up = [0] * g.n
    resolved = [_NEG] * g.n

    def free(c):
        # best subtree value of child c when its parent edge is unused
        if up_edge[c] in locked:
            return _NEG
        return max(center[c], resolved[c])

    for v in reversed(order):
        ch = children[v]
        frees = [free(c) for c in ch]
        center[v] = sum(max(g.weight(up_edge[c]) + leaf_up[c], f) for c, f in zip(ch, frees))
        leaf_up[v] = sum(frees)
        if ch:
            pre = [0]
            for f in frees:
                pre.append(pre[-1] + f)
            suf = [0]
            for f in reversed(frees):
                suf.append(suf[-1] + f)
            suf.reverse()
            resolved[v] = max(g.weight(up_edge[c]) + center[c] + pre[i] + suf[i + 1]
                              for i, c in enumerate(ch))

    # top-down reconstruction
    chosen = set()
    state = {}
    for v in order:
        if parent[v] < 0:
            state[v] = "center" if center[v] >= resolved[v] else "resolved"
        s = state[v]
        ch = children[v]
        if s == "center":
            for c in ch:
                e = up_edge[c]
                if g.weight(e) + leaf_up[c] >= free(c):
                    chosen.add(e)
                    state[c] = "leaf_up"
                else:
                    state[c] = "center" if center[c] >= resolved[c] else "resolved"
        elif s == "leaf_up":
            for c in ch:
                state[c] = "center" if center[c] >= resolved[c] else "resolved"
        else:
            frees = [free(c) for c in ch]
            best_i, best_val = 0, _NEG
            for i, c in enumerate(ch):
                val = g.weight(up_edge[c]) + center[c] + sum(frees[:i]) + sum(frees[i + 1:])
                if val > best_val:
                    best_i, best_val = i, val
            for i, c in enumerate(ch):
                if i == best_i:
                    chosen.add(up_edge[c])
                    state[c] = "center"
                else:
                    state[c] = "center" if center[c] >= resolved[c] else "resolved"

    value = sum(max(center[r], resolved[r]) for r in order if parent[r] < 0)
    witness = frozenset(chosen)
    assert value == g.total(witness), (value, g.total(witness))
    assert locked <= witness
    return SolveReport("wssf_tree", int(value), witness, g.n, (time.perf_counter() - t0) * 1000)
