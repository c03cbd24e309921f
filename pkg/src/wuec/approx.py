"""Polynomial-time approximation engines.

=============================  ==========================================
engine                         guarantee (vs. exact optimum)
=============================  ==========================================
``wssf_half_approx``           1/2 of the best spanning star forest
``ext_wssf_half_approx``       1/2 of the best forest containing ``U``
                               (monitored empirically, see tests)
``uec_complete_approx``        1/2 of uec on complete graphs
``uec_ktree_approx``           (k-1)/(2(k+1)) of uec on k-trees
``uec_bounded_degree_approx``  1/(2*Delta) of uec on max-degree-Delta graphs
=============================  ==========================================
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .conflict import ConflictGraph, MISResult, build_conflict_graph, greedy_weighted_mis
from .errors import InputError, WrongClass
from .graph import (
    ForcedStarPacking,
    MinimalEdgeCover,
    StarForest,
    WeightedGraph,
    any_minimal_edge_cover,
    attach_trivials,
    is_minimal_edge_cover,
    nicify,
    pendant_edges,
    star_forest_decompose,
)
from .ktree import KTreeColoring, check_construction_order, color_edge_sets, ktree_recognize
from .ktree import _color_order
from .treedp import wssf_tree_dp

__all__ = [
    "max_weight_spanning_forest",
    "wssf_half_approx",
    "ext_wssf_half_approx",
    "uec_complete_approx",
    "uec_ktree_approx",
    "uec_bounded_degree_approx",
    "bounded_degree_trace",
    "BoundedDegreeTrace",
    "guarantee",
]


def guarantee(engine, g=None, k=None):
    """Approximation ratio promised by ``engine`` as an exact fraction."""
    if engine in ("wssf-half", "ext-wssf-half", "complete"):
        return Fraction(1, 2)
    if engine == "ktree":
        return Fraction(k - 1, 2 * (k + 1))
    if engine == "bounded-degree":
        return Fraction(1, 2 * max(g.max_degree, 1))
    raise InputError(f"unknown engine {engine!r}")


def max_weight_spanning_forest(g: WeightedGraph, forced: Optional[ForcedStarPacking] = None) -> frozenset:
    """Kruskal seeded with the forced edges; zero-weight edges only if forced."""
    root = list(range(g.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    chosen = set()
    seed = sorted(forced.edges) if forced is not None else []
    for e in seed:
        u, v = g.endpoints(e)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InputError(f"forced edges contain a cycle at edge {e}")
        root[ru] = rv
        chosen.add(e)
    for e in sorted(range(g.m), key=lambda e: (-g.weight(e), e)):
        if e in chosen or g.weight(e) == 0:
            continue
        u, v = g.endpoints(e)
        ru, rv = find(u), find(v)
        if ru != rv:
            root[ru] = rv
            chosen.add(e)
    return frozenset(chosen)


def _forest_dp(g, forest, forced_edges=frozenset()):
    sub, back = g.edge_subgraph(forest)
    pos = {e: i for i, e in enumerate(back)}
    packing = ForcedStarPacking(sub, {pos[e] for e in forced_edges})
    rep = wssf_tree_dp(sub, packing)
    return star_forest_decompose(g, {back[e] for e in rep.witness})


def wssf_half_approx(g: WeightedGraph) -> StarForest:
    """Best star forest inside a maximum-weight spanning forest.

    Any star forest is a forest, so the spanning forest outweighs the
    optimum; a tree splits into two star forests by depth parity, so the
    tree optimum is at least half the tree.
    """
    return _forest_dp(g, max_weight_spanning_forest(g))


def ext_wssf_half_approx(g: WeightedGraph, u: ForcedStarPacking) -> StarForest:
    forest = max_weight_spanning_forest(g, u)
    sf = _forest_dp(g, forest, u.edges)
    assert u.edges <= sf.edges
    return sf


def uec_complete_approx(g: WeightedGraph) -> MinimalEdgeCover:
    if g.n < 2 or not g.is_complete():
        raise WrongClass("uec_complete_approx needs a complete graph on at least 2 vertices")
    sf = nicify(g, wssf_half_approx(g))
    if not sf.edges:
        return any_minimal_edge_cover(g)
    return attach_trivials(g, sf)


class _Stars:
    """Mutable leaf -> centre structure used by the reconnection loops."""

    def __init__(self, sf: StarForest):
        self.parent = dict(sf.parent)
        self.kids = {c: set(ls) for c, ls in sf.star_leaves.items()}

    def attach(self, g, t, u):
        """Make trivial ``t`` a leaf of ``u``; return the dropped edge or None.

        A leaf ``u`` of a star with two or more leaves leaves that star
        (its edge is dropped); a leaf of a single-edge star becomes the
        centre instead.
        """
        dropped = None
        if u in self.parent:
            c = self.parent[u]
            if len(self.kids[c]) >= 2:
                dropped = g.edge_id(u, c)
                self.kids[c].discard(u)
            else:
                self.kids[c] = set()
                self.parent[c] = u
                self.kids.setdefault(u, set()).add(c)
            del self.parent[u]
        self.parent[t] = u
        self.kids.setdefault(u, set()).add(t)
        return dropped

    def edge_ids(self, g):
        return frozenset(g.edge_id(v, c) for v, c in self.parent.items())


def uec_ktree_approx(g: WeightedGraph, k: int, order=None) -> MinimalEdgeCover:
    """Minimal edge cover of a ``k``-tree from a nice half-approximate star forest.

    Trivial vertices are re-attached through neighbours of the two colours
    whose leaf edges weigh least in total; only edges of those two colour
    classes are ever dropped.
    """
    if order is not None:
        if not check_construction_order(g, k, order):
            raise InputError("given order is not a k-tree construction order")
        coloring = KTreeColoring(k, tuple(order), _color_order(g, tuple(order), k))
    else:
        coloring = ktree_recognize(g, k)
    if g.n == k + 1:
        return uec_complete_approx(g)
    sf = nicify(g, wssf_half_approx(g))
    if not sf.triv:
        return MinimalEdgeCover.from_edges(g, sf.edges)
    col = color_edge_sets(coloring, sf)
    sets = col.color_edge_sets
    pairs = [(i, j) for i in sets for j in sets if i < j]
    i1, i2 = min(pairs, key=lambda p: (g.total(sets[p[0]] | sets[p[1]]), p))
    budget = g.total(sets[i1] | sets[i2])

    stars = _Stars(sf)
    for t in sorted(sf.triv):
        cands = [(g.weight(e), -x, x) for x, e in g.incident(t)
                 if coloring.color[x] in (i1, i2) and x not in sf.triv]
        if not cands:  # pragma: no cover - excluded by the k-tree colouring
            raise AssertionError(f"trivial vertex {t} has no neighbour of colours {i1}, {i2}")
        u = max(cands)[2]
        stars.attach(g, t, u)
    edges = stars.edge_ids(g)
    assert is_minimal_edge_cover(g, edges)
    cover = MinimalEdgeCover(g, edges, g.total(edges))
    assert cover.weight >= sf.weight - budget
    return cover


@dataclass(frozen=True)
class BoundedDegreeTrace:
    forest: StarForest
    conflict: Optional[ConflictGraph]
    mis: Optional[MISResult]
    cover: MinimalEdgeCover
    floor: int  # w'(I) + sum of second-heaviest trivial edges


def bounded_degree_trace(g: WeightedGraph) -> BoundedDegreeTrace:
    """Run the bounded-degree engine and keep every intermediate object."""
    if g.n < 2 or not g.is_connected():
        raise WrongClass("bounded-degree engine needs a connected graph on at least 2 vertices")
    forced = ForcedStarPacking(g, pendant_edges(g))
    sf = nicify(g, ext_wssf_half_approx(g, forced), forced)
    if not sf.triv:
        cover = MinimalEdgeCover.from_edges(g, sf.edges)
        return BoundedDegreeTrace(sf, None, None, cover, sf.weight)
    cg = build_conflict_graph(g, sf)
    assert cg.max_degree <= g.max_degree - 1
    mis = greedy_weighted_mis(cg)
    stars = _Stars(sf)
    floor = mis.weight
    for t in sorted(sf.triv):
        e1, e2 = cg.per_trivial[t]
        x, y = g.other(e1, t), g.other(e2, t)
        v = x if x not in mis.set or y in mis.set else y
        stars.attach(g, t, v)
        floor += g.weight(e2)
    edges = stars.edge_ids(g)
    assert is_minimal_edge_cover(g, edges), "reconnection produced a non-minimal cover"
    cover = MinimalEdgeCover(g, edges, g.total(edges))
    assert cover.weight >= floor
    assert mis.weight * (cg.max_degree + 1) >= cg.total_weight
    assert cover.weight * g.max_degree >= sf.weight
    return BoundedDegreeTrace(sf, cg, mis, cover, floor)


def uec_bounded_degree_approx(g: WeightedGraph) -> MinimalEdgeCover:
    """Minimal edge cover within ``1/(2*Delta)`` of the optimum."""
    return bounded_degree_trace(g).cover
