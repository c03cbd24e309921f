"""Graph-class predicates used to check reduction targets."""

from __future__ import annotations

from collections import deque

from .graph import WeightedGraph

__all__ = ["is_bipartite", "is_split", "is_independent_set"]


def is_bipartite(g: WeightedGraph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_split(g: WeightedGraph) -> bool:
    """Hammer-Simeone degree-sequence test."""
    deg = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    if not deg:
        return True
    top = max(i for i, d in enumerate(deg, start=1) if d >= i - 1)
    return sum(deg[:top]) == top * (top - 1) + sum(deg[top:])


def is_independent_set(g: WeightedGraph, vs) -> bool:
    vs = set(vs)
    return not any(u in vs and v in vs for u, v, _ in g.edges)
