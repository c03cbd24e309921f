"""k-tree recognition and the canonical (k+1)-colouring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping

from .errors import NotAKTree
from .graph import StarForest, WeightedGraph

__all__ = ["KTreeColoring", "ktree_recognize", "color_edge_sets", "check_construction_order"]


@dataclass(frozen=True)
class KTreeColoring:
    k: int
    order: tuple
    color: Mapping[int, int] = field(hash=False)
    color_edge_sets: Dict[int, frozenset] = field(default_factory=dict, hash=False, compare=False)

    def classes(self):
        out = {i: [] for i in range(1, self.k + 2)}
        for v in self.order:
            out[self.color[v]].append(v)
        return out


def _is_clique(g, vs):
    vs = list(vs)
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def ktree_recognize(g: WeightedGraph, k: int) -> KTreeColoring:
    """Peel simplicial degree-``k`` vertices until a ``K_{k+1}`` remains.

    The reversed peeling order is a construction order.  Colouring that
    order first-fit gives the base clique colours ``1..k+1`` and every later
    vertex the single colour missing from its ``k``-clique neighbourhood, so
    each vertex sees all other colours.
    """
    if k < 1:
        raise NotAKTree(f"k must be positive, got {k}")
    if g.n < k + 1:
        raise NotAKTree(f"{g.n} vertices cannot form a {k}-tree")
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    peeled = []
    while len(alive) > k + 1:
        pick = None
        for v in sorted(alive):
            if len(nbrs[v]) == k and _is_clique(g, nbrs[v]):
                pick = v
                break
        if pick is None:
            stuck = min(alive, key=lambda v: (len(nbrs[v]), v))
            raise NotAKTree(
                f"no simplicial vertex of degree {k} left; vertex {stuck} has degree {len(nbrs[stuck])}",
                stuck,
            )
        for x in nbrs[pick]:
            nbrs[x].discard(pick)
        alive.discard(pick)
        peeled.append(pick)
    base = sorted(alive)
    if not _is_clique(g, base):
        bad = next(v for v in base if len(nbrs[v]) < k)
        raise NotAKTree(f"remaining {k + 1} vertices do not form a clique", bad)
    order = tuple(base + peeled[::-1])
    return KTreeColoring(k, order, _color_order(g, order, k))


def check_construction_order(g: WeightedGraph, k: int, order) -> bool:
    """True iff ``order`` builds ``g`` as a ``k``-tree."""
    order = list(order)
    if sorted(order) != list(range(g.n)) or g.n < k + 1:
        return False
    if not _is_clique(g, order[: k + 1]):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order[k + 1:]:
        earlier = [x for x in g.neighbors(v) if pos[x] < pos[v]]
        if len(earlier) != k or not _is_clique(g, earlier):
            return False
    return True


def _color_order(g, order, k):
    color = {}
    for v in order:
        used = {color[x] for x in g.neighbors(v) if x in color}
        color[v] = next(c for c in range(1, k + 2) if c not in used)
    return color


def color_edge_sets(coloring: KTreeColoring, sf: StarForest) -> KTreeColoring:
    """Attach ``E_i`` = leaf edges of the colour-``i`` leaves of ``sf``."""
    sets = {i: set() for i in range(1, coloring.k + 2)}
    for v in sf.leaves:
        sets[coloring.color[v]].add(sf.leaf_edge[v])
    return KTreeColoring(coloring.k, coloring.order, coloring.color,
                         {i: frozenset(s) for i, s in sets.items()})
