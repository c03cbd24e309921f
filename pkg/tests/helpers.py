"""Graph builders, hypothesis strategies and brute force independent of the package."""

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from wuec.graph import WeightedGraph


def path(weights):
    return WeightedGraph(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)])


def cycle(weights):
    n = len(weights)
    return WeightedGraph(n, [(i, (i + 1) % n, w) for i, w in enumerate(weights)])


def star(k, w=1):
    return WeightedGraph(k + 1, [(0, i, w) for i in range(1, k + 1)])


def complete(n, w=1):
    return WeightedGraph.complete(n, lambda u, v: w)


def from_nx(h, weight=lambda u, v: 1):
    h = nx.convert_node_labels_to_integers(h)
    return WeightedGraph(h.number_of_nodes(), [(u, v, weight(u, v)) for u, v in h.edges()])


def petersen():
    return from_nx(nx.petersen_graph())


def random_graph(rng, n, p=0.4, lo=0, hi=10, connected=True):
    pairs = set()
    if connected and n > 1:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            a, b = order[i], rng.choice(order[:i])
            pairs.add((min(a, b), max(a, b)))
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < p:
            pairs.add((a, b))
    return WeightedGraph(n, [(a, b, rng.randint(lo, hi)) for a, b in sorted(pairs)])


def random_forest(rng, n, keep=0.8, lo=0, hi=100):
    edges = []
    for v in range(1, n):
        if rng.random() < keep:
            edges.append((rng.randrange(v), v, rng.randint(lo, hi)))
    return WeightedGraph(n, edges)


# -- brute force, deliberately independent of the package -----------------

def brute_alpha(g):
    for size in range(g.n, -1, -1):
        for vs in itertools.combinations(range(g.n), size):
            s = set(vs)
            if not any(u in s and v in s for u, v, _ in g.edges):
                return size
    return 0


def brute_gamma(g):
    closed = [{v} | set(g.neighbors(v)) for v in range(g.n)]
    for size in range(g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            if set().union(*(closed[v] for v in vs)) == set(range(g.n)):
                return size


def _is_star_forest(g, s):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.endpoints(e) for e in s)
    for comp in nx.connected_components(h):
        sub = h.subgraph(comp)
        if not nx.is_tree(sub):
            return False
        if sum(1 for v in comp if sub.degree(v) >= 2) > 1:
            return False
    return True


def _covers(g, s):
    seen = set()
    for e in s:
        seen.update(g.endpoints(e))
    return len(seen) == g.n


def brute_uec(g):
    """Max weight over edge subsets that cover and lose coverage on any removal."""
    best = None
    for r in range(g.m + 1):
        for s in itertools.combinations(range(g.m), r):
            if not _covers(g, s):
                continue
            if any(_covers(g, [x for x in s if x != e]) for e in s):
                continue
            w = g.total(s)
            best = w if best is None else max(best, w)
    return best


def brute_wssf(g, forced=()):
    forced = set(forced)
    best = None
    for r in range(g.m + 1):
        for s in itertools.combinations(range(g.m), r):
            if forced <= set(s) and _is_star_forest(g, s):
                w = g.total(s)
                best = w if best is None else max(best, w)
    return best


def brute_cycle_ok(g):
    """Cycle inequality by enumerating every simple cycle."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v, w in g.edges:
        h.add_edge(u, v, weight=w)
    for cyc in nx.simple_cycles(h):
        if len(cyc) < 3:
            continue
        ws = [h[cyc[i]][cyc[(i + 1) % len(cyc)]]["weight"] for i in range(len(cyc))]
        if 2 * max(ws) > sum(ws):
            return False
    return True


# -- hypothesis strategies --------------------------------------------------

@st.composite
def graphs(draw, min_n=1, max_n=7, max_w=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    chosen = set(chosen)
    if connected and n > 1:
        seed = draw(st.integers(0, 2**16))
        rng = random.Random(seed)
        for v in range(1, n):
            u = rng.randrange(v)
            chosen.add((u, v))
    weights = draw(st.lists(st.integers(0, max_w), min_size=len(chosen), max_size=len(chosen)))
    return WeightedGraph(n, [(a, b, w) for (a, b), w in zip(sorted(chosen), weights)])


@st.composite
def graph_with_subset(draw, **kw):
    g = draw(graphs(**kw))
    s = draw(st.sets(st.integers(0, max(g.m - 1, 0)))) if g.m else set()
    return g, frozenset(s)
