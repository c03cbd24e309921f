"""Weighted graphs, star forests and minimal edge covers.

Vertices are ``0..n-1``.  Edges are stored once as ``(u, v, w)`` with
``u < v`` and are addressed by their position in :attr:`WeightedGraph.edges`
(the *edge id*).  Weights are non-negative integers; fractional inputs are
scaled to integers by the instance parser.

A minimal edge cover is exactly a spanning star forest without trivial
stars, so both problems share the :class:`StarForest` view: every vertex is
either trivial, a centre, or a leaf hanging from exactly one centre.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import (
    CannotAttach,
    ForcedConflict,
    InputError,
    InvalidEdgeError,
    NotAStarForest,
)

__all__ = [
    "WeightedGraph",
    "EdgeSet",
    "StarForest",
    "MinimalEdgeCover",
    "ForcedStarPacking",
    "CycleWitness",
    "edge_set",
    "is_edge_cover",
    "is_minimal_edge_cover",
    "star_forest_decompose",
    "star_forest_from_parents",
    "is_nice",
    "nicify",
    "attach_trivials",
    "any_minimal_edge_cover",
    "pendant_edges",
    "check_cycle_inequality",
]

EdgeSet = frozenset  # frozenset[int] of edge ids of a host graph


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with non-negative integer edge weights."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a non-negative int, got {self.n!r}")
        norm = []
        seen = set()
        for item in self.edges:
            try:
                u, v, w = item
            except (TypeError, ValueError):
                raise InputError(f"edge must be a (u, v, weight) triple, got {item!r}") from None
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if isinstance(w, bool) or not isinstance(w, int):
                raise InputError(f"weight of edge ({u}, {v}) must be an int, got {w!r}")
            if w < 0:
                raise InputError(f"negative weight {w} on edge ({u}, {v})")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"parallel edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v, w))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def complete(cls, n, weight=lambda u, v: 0):
        return cls(n, [(u, v, weight(u, v)) for u in range(n) for v in range(u + 1, n)])

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def _adj(self):
        adj = [[] for _ in range(self.n)]
        for eid, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _index(self):
        return {(u, v): eid for eid, (u, v, _) in enumerate(self.edges)}

    def incident(self, v):
        """Pairs ``(neighbour, edge id)`` around ``v``."""
        return self._adj[v]

    def neighbors(self, v):
        return [x for x, _ in self._adj[v]]

    def degree(self, v):
        return len(self._adj[v])

    @cached_property
    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def edge_id(self, u, v):
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise InvalidEdgeError(f"no edge between {u} and {v}") from None

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self._index

    def endpoints(self, eid):
        u, v, _ = self.edges[eid]
        return u, v

    def other(self, eid, x):
        u, v, _ = self.edges[eid]
        return v if x == u else u

    def weight(self, eid):
        return self.edges[eid][2]

    def total(self, eids):
        return sum(self.edges[e][2] for e in eids)

    @cached_property
    def total_weight(self):
        return sum(w for _, _, w in self.edges)

    def components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y, _ in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def isolated_vertices(self):
        return [v for v in range(self.n) if not self._adj[v]]

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def edge_subgraph(self, eids):
        """Spanning subgraph on the given edges.

        Returns ``(sub, back)`` where ``back[i]`` is the host id of edge ``i``
        of ``sub``.
        """
        back = sorted(set(eids))
        sub = WeightedGraph(self.n, [self.edges[e] for e in back])
        return sub, back


def edge_set(g: WeightedGraph, s: Iterable[int]) -> frozenset:
    """Validate edge ids against ``g`` and freeze them."""
    out = frozenset(s)
    for e in out:
        if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < g.m:
            raise InvalidEdgeError(f"edge id {e!r} is not valid for a graph with {g.m} edges")
    return out


def _cover_counts(g, s):
    count = [0] * g.n
    for e in s:
        u, v, _ = g.edges[e]
        count[u] += 1
        count[v] += 1
    return count


def is_edge_cover(g: WeightedGraph, s) -> bool:
    s = edge_set(g, s)
    return all(c > 0 for c in _cover_counts(g, s))


def is_minimal_edge_cover(g: WeightedGraph, s) -> bool:
    """True iff ``s`` covers every vertex and no single edge is redundant.

    Coverage is monotone, so testing single-edge removals is enough.
    """
    s = edge_set(g, s)
    count = _cover_counts(g, s)
    if any(c == 0 for c in count):
        return False
    for e in s:
        u, v, _ = g.edges[e]
        if count[u] > 1 and count[v] > 1:
            return False
    return True


@dataclass(frozen=True)
class StarForest:
    """Spanning star forest of ``host`` with an explicit role partition.

    ``leaf_edge`` maps every leaf to the edge joining it to its centre.  A
    single-edge star has its lower vertex id as centre.
    """

    host: WeightedGraph
    edges: frozenset
    triv: frozenset
    centers: frozenset
    leaves: frozenset
    leaf_edge: Mapping[int, int] = field(hash=False, compare=False)

    @cached_property
    def weight(self):
        return self.host.total(self.edges)

    def center_of(self, leaf):
        return self.host.other(self.leaf_edge[leaf], leaf)

    @cached_property
    def parent(self):
        """Leaf -> centre map."""
        return {v: self.center_of(v) for v in self.leaves}

    @cached_property
    def star_leaves(self):
        """Centre -> sorted list of its leaves."""
        out = {c: [] for c in self.centers}
        for v in sorted(self.leaves):
            out[self.center_of(v)].append(v)
        return out

    def star_size(self, center):
        return len(self.star_leaves[center])

    def in_one_star(self, v):
        """True if ``v`` belongs to a single-edge star (either endpoint)."""
        if v in self.centers:
            return len(self.star_leaves[v]) == 1
        if v in self.leaves:
            return len(self.star_leaves[self.center_of(v)]) == 1
        return False


@dataclass(frozen=True)
class MinimalEdgeCover:
    host: WeightedGraph
    edges: frozenset
    weight: int

    @classmethod
    def from_edges(cls, g, s):
        s = edge_set(g, s)
        if not is_minimal_edge_cover(g, s):
            raise InputError("edge set is not a minimal edge cover")
        return cls(g, s, g.total(s))

    def as_star_forest(self):
        return star_forest_decompose(self.host, self.edges)


@dataclass(frozen=True)
class ForcedStarPacking:
    """Edges that must appear in a spanning star forest."""

    host: WeightedGraph
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", edge_set(self.host, self.edges))
        try:
            star_forest_decompose(self.host, self.edges)
        except NotAStarForest as exc:
            raise InputError(f"forced edges are not a star packing: {exc}") from None


@dataclass(frozen=True)
class CycleWitness:
    edge: int
    cycle: tuple
    cycle_weight: int


def star_forest_decompose(g: WeightedGraph, s) -> StarForest:
    """Split ``(V, s)`` into stars; raise :class:`NotAStarForest` otherwise."""
    s = edge_set(g, s)
    deg = _cover_counts(g, s)
    # union-find over s to count vertices and edges per component
    root = list(range(g.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for e in s:
        u, v, _ = g.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotAStarForest(f"edge set contains a cycle through edge {e}")
        root[ru] = rv
    hubs = {}
    for v in range(g.n):
        if deg[v] >= 2:
            r = find(v)
            if r in hubs:
                raise NotAStarForest(
                    f"component of vertex {v} has two vertices of degree >= 2 ({hubs[r]}, {v})"
                )
            hubs[r] = v
    triv, centers, leaves, leaf_edge = set(), set(), set(), {}
    for v in range(g.n):
        if deg[v] == 0:
            triv.add(v)
    for e in sorted(s):
        u, v, _ = g.edges[e]
        r = find(u)
        c = hubs.get(r, min(u, v))
        leaf = v if c == u else u
        centers.add(c)
        leaves.add(leaf)
        leaf_edge[leaf] = e
    return StarForest(g, s, frozenset(triv), frozenset(centers), frozenset(leaves), leaf_edge)


def star_forest_from_parents(g: WeightedGraph, parent: Mapping[int, int]) -> StarForest:
    """Build a star forest from a leaf -> centre map."""
    return star_forest_decompose(g, {g.edge_id(v, c) for v, c in parent.items()})


def pendant_edges(g: WeightedGraph) -> frozenset:
    return frozenset(e for e, (u, v, _) in enumerate(g.edges) if g.degree(u) == 1 or g.degree(v) == 1)


def _nice_violations(g, sf, t):
    """Candidate repairs for trivial vertex ``t``: ``(gain, eid, drop)`` triples."""
    out = []
    for x, e in g.incident(t):
        w = g.weight(e)
        if x in sf.triv or x in sf.centers or sf.in_one_star(x):
            out.append((w, e, None))
        elif x in sf.leaves:
            le = sf.leaf_edge[x]
            if w > g.weight(le):
                out.append((w - g.weight(le), e, le))
    return out


def is_nice(g: WeightedGraph, sf: StarForest) -> bool:
    """Trivial vertices are independent, touch only leaves of stars with at
    least two leaves, and never beat the leaf's own star edge."""
    return not any(_nice_violations(g, sf, t) for t in sf.triv)


def nicify(g: WeightedGraph, s: StarForest, forced: Optional[ForcedStarPacking] = None) -> StarForest:
    """Repair ``s`` into a nice spanning star forest of no smaller weight.

    Trivial vertices are handled in ascending id order; for each, the repair
    with the largest weight gain wins (ties: lowest edge id).  Every repair
    removes one vertex from the trivial set, so at most ``n`` rounds run.
    """
    locked = forced.edges if forced is not None else frozenset()
    if not locked <= s.edges:
        raise InputError("forced edges must be contained in the star forest")
    edges = set(s.edges)
    sf = s
    while True:
        move = None
        conflict = None
        for t in sorted(sf.triv):
            cands = _nice_violations(g, sf, t)
            usable = [c for c in cands if c[2] is None or c[2] not in locked]
            if usable:
                move = max(usable, key=lambda c: (c[0], -c[1]))
                break
            if cands and conflict is None:
                conflict = (t, cands[0][2])
        if move is None:
            if conflict is not None:
                t, e = conflict
                raise ForcedConflict(f"making vertex {t} nice requires dropping forced edge {e}")
            return sf
        _, add, drop = move
        edges.add(add)
        if drop is not None:
            edges.discard(drop)
        sf = star_forest_decompose(g, edges)


def attach_trivials(g: WeightedGraph, s: StarForest) -> MinimalEdgeCover:
    """Hang every trivial vertex on an adjacent star centre.

    Both ends of a single-edge star count as centres.  The heaviest
    attaching edge wins, ties go to the lowest centre id.
    """
    edges = set(s.edges)
    sf = s
    for t in sorted(s.triv):
        best = None
        for x, e in g.incident(t):
            if x in sf.centers or sf.in_one_star(x):
                key = (g.weight(e), -x)
                if best is None or key > best[0]:
                    best = (key, e)
        if best is None:
            raise CannotAttach(f"trivial vertex {t} has no neighbouring centre")
        edges.add(best[1])
        sf = star_forest_decompose(g, edges)
    return MinimalEdgeCover.from_edges(g, edges)


def any_minimal_edge_cover(g: WeightedGraph) -> MinimalEdgeCover:
    """Some minimal edge cover: one edge per vertex, then prune redundancies."""
    if g.isolated_vertices():
        raise InputError("graph has isolated vertices; no edge cover exists")
    chosen = set()
    for v in range(g.n):
        if not any(e in chosen for _, e in g.incident(v)):
            chosen.add(min(e for _, e in g.incident(v)))
    count = _cover_counts(g, chosen)
    for e in sorted(chosen):
        u, v, _ = g.edges[e]
        if count[u] > 1 and count[v] > 1:
            chosen.discard(e)
            count[u] -= 1
            count[v] -= 1
    return MinimalEdgeCover.from_edges(g, chosen)


def _shortest_path_avoiding(g, src, dst, banned):
    dist = {src: 0}
    via = {}
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if x == dst:
            path = []
            while x != src:
                e = via[x]
                path.append(e)
                x = g.other(e, x)
            return d, path[::-1]
        if d > dist[x]:
            continue
        for y, e in g.incident(x):
            if e == banned:
                continue
            nd = d + g.weight(e)
            if nd < dist.get(y, nd + 1):
                dist[y] = nd
                via[y] = e
                heapq.heappush(heap, (nd, y))
    return None, None


def check_cycle_inequality(g: WeightedGraph):
    """Return ``(ok, witness)``.

    Over all cycles through ``e = uv`` the smallest ``w(C) - w(e)`` is the
    shortest ``u``-``v`` distance in ``g - e``, so the condition reduces to
    one Dijkstra run per edge.
    """
    for e, (u, v, w) in enumerate(g.edges):
        d, path = _shortest_path_avoiding(g, u, v, e)
        if d is not None and d < w:
            return False, CycleWitness(e, (e, *path), w + d)
    return True, None
