"""Leaf conflict graph of a nice star forest and greedy weighted MIS."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from .errors import DegreeViolation
from .graph import StarForest, WeightedGraph

__all__ = ["ConflictGraph", "MISResult", "build_conflict_graph", "greedy_weighted_mis"]


@dataclass(frozen=True)
class ConflictGraph:
    """Vertex-weighted graph on the leaves of a star forest.

    ``per_trivial[t] = (e1, e2)`` are the two heaviest edges at trivial
    vertex ``t`` (``w(e1) >= w(e2)``); their far endpoints are joined in
    :attr:`edges`.
    """

    vertices: frozenset
    vertex_weight: Mapping[int, int] = field(hash=False)
    edges: frozenset = frozenset()
    per_trivial: Dict[int, Tuple[int, int]] = field(default_factory=dict, hash=False)

    @property
    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    @property
    def max_degree(self):
        return max((len(s) for s in self.adjacency.values()), default=0)

    @property
    def total_weight(self):
        return sum(self.vertex_weight.values())


@dataclass(frozen=True)
class MISResult:
    set: frozenset
    weight: int


def build_conflict_graph(g: WeightedGraph, s: StarForest) -> ConflictGraph:
    per_trivial = {}
    edges = set()
    for t in sorted(s.triv):
        inc = sorted((e for _, e in g.incident(t) if e not in s.edges),
                     key=lambda e: (-g.weight(e), e))
        if len(inc) < 2:
            raise DegreeViolation(f"trivial vertex {t} has fewer than two usable edges")
        e1, e2 = inc[0], inc[1]
        x, y = g.other(e1, t), g.other(e2, t)
        assert x in s.leaves and y in s.leaves, "star forest is not nice"
        per_trivial[t] = (e1, e2)
        edges.add((min(x, y), max(x, y)))
    weights = {v: g.weight(s.leaf_edge[v]) for v in s.leaves}
    return ConflictGraph(frozenset(s.leaves), weights, frozenset(edges), per_trivial)


def greedy_weighted_mis(cg: ConflictGraph) -> MISResult:
    """Take the heaviest remaining vertex (ties: lowest id), drop its
    neighbours, repeat.  The result weighs at least
    ``total / (max degree + 1)``."""
    adj = cg.adjacency
    alive = set(cg.vertices)
    chosen = set()
    for v in sorted(cg.vertices, key=lambda v: (-cg.vertex_weight[v], v)):
        if v in alive:
            chosen.add(v)
            alive.discard(v)
            alive -= adj[v]
    weight = sum(cg.vertex_weight[v] for v in chosen)
    assert weight * (cg.max_degree + 1) >= cg.total_weight
    return MISResult(frozenset(chosen), weight)
