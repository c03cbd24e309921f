"""Seeded random instance generators for the graph classes of interest.

Every generator is a pure function of ``(model, params, seed)``: it draws
only from its own ``random.Random(seed)``.

Weight alphabets (``params["weights"]``):

``binary``      {0, 1}
``bivalued``    {a, b}, defaults a=1, b=2
``trivalued``   {a, b, c}, defaults 0, 1, 7
``uniform``     integers in [lo, hi], defaults 0..10
``unit``        all 1
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InputError
from .graph import WeightedGraph
from .instance import Instance

__all__ = ["generate", "MODELS", "random_weights"]


def random_weights(rng: random.Random, count, params):
    kind = params.get("weights", "uniform")
    if kind == "unit":
        return [1] * count
    if kind == "binary":
        alphabet = [0, 1]
    elif kind == "bivalued":
        alphabet = [params.get("a", 1), params.get("b", 2)]
    elif kind == "trivalued":
        alphabet = list(params.get("values", (0, 1, 7)))
        if len(alphabet) != 3:
            raise InputError("trivalued weights need exactly three values")
    elif kind == "uniform":
        lo, hi = params.get("lo", 0), params.get("hi", 10)
        if lo < 0 or hi < lo:
            raise InputError(f"bad uniform weight range [{lo}, {hi}]")
        return [rng.randint(lo, hi) for _ in range(count)]
    else:
        raise InputError(f"unknown weight alphabet {kind!r}")
    if min(alphabet) < 0:
        raise InputError("weights must be non-negative")
    return [rng.choice(alphabet) for _ in range(count)]


def _finish(rng, n, pairs, params, tag="wuec", order=None):
    pairs = sorted({(min(a, b), max(a, b)) for a, b in pairs})
    ws = random_weights(rng, len(pairs), params)
    g = WeightedGraph(n, [(a, b, w) for (a, b), w in zip(pairs, ws)])
    return Instance(params.get("tag", tag), g, 1, order)


def _need(params, key, lo=None):
    if key not in params:
        raise InputError(f"missing parameter {key!r}")
    val = params[key]
    if lo is not None and val < lo:
        raise InputError(f"parameter {key}={val} must be at least {lo}")
    return val


def _complete(rng, params):
    n = _need(params, "n", 1)
    return _finish(rng, n, combinations(range(n), 2), params)


def _random_tree(rng, vertices):
    vertices = list(vertices)
    rng.shuffle(vertices)
    return [(v, rng.choice(vertices[:i])) for i, v in enumerate(vertices) if i]


def _connected(rng, params):
    """Random spanning tree plus each remaining pair with probability ``p``."""
    n = _need(params, "n", 1)
    p = params.get("p", 0.3)
    pairs = set(_random_tree(rng, range(n)))
    pairs = {(min(e), max(e)) for e in pairs}
    for e in combinations(range(n), 2):
        if e not in pairs and rng.random() < p:
            pairs.add(e)
    return _finish(rng, n, pairs, params)


def _forest(rng, params):
    n = _need(params, "n", 1)
    p = params.get("p", 0.8)
    pairs = [e for e in _random_tree(rng, range(n)) if rng.random() < p]
    return _finish(rng, n, pairs, params, tag="wssf")


def _bipartite(rng, params):
    a = _need(params, "left", 1)
    b = _need(params, "right", 1)
    p = params.get("p", 0.5)
    left, right = range(a), range(a, a + b)
    pairs = {(x, y) for x in left for y in right if rng.random() < p}
    # connect: every vertex gets at least one edge across
    for x in left:
        if not any(e[0] == x for e in pairs):
            pairs.add((x, rng.choice(right)))
    for y in right:
        if not any(e[1] == y for e in pairs):
            pairs.add((rng.choice(left), y))
    return _finish(rng, a + b, pairs, params)


def _split(rng, params):
    c = _need(params, "clique", 1)
    s = _need(params, "independent", 0)
    p = params.get("p", 0.5)
    pairs = set(combinations(range(c), 2))
    for y in range(c, c + s):
        nb = [x for x in range(c) if rng.random() < p] or [rng.randrange(c)]
        pairs.update((x, y) for x in nb)
    return _finish(rng, c + s, pairs, params)


def _ktree(rng, params):
    k = _need(params, "k", 1)
    n = _need(params, "n", k + 1)
    cliques = [tuple(range(k + 1))]
    pairs = set(combinations(range(k + 1), 2))
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        drop = rng.randrange(k + 1)
        host = tuple(x for i, x in enumerate(base) if i != drop)
        pairs.update((x, v) for x in host)
        cliques.append(tuple(sorted(host + (v,))))
    return _finish(rng, n, pairs, params, order=tuple(range(n)))


def _bounded_degree(rng, params):
    """Connected graph with maximum degree at most ``delta``."""
    n = _need(params, "n", 1)
    delta = _need(params, "delta", 1)
    if delta == 1 and n > 2:
        raise InputError("a connected graph with max degree 1 has at most 2 vertices")
    extra = params.get("p", 0.3)
    deg = [0] * n
    pairs = set()
    order = list(range(n))
    rng.shuffle(order)
    for i, v in enumerate(order[1:], start=1):
        open_ = [u for u in order[:i] if deg[u] < delta]
        u = rng.choice(open_)
        pairs.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    for a, b in combinations(range(n), 2):
        if (a, b) not in pairs and deg[a] < delta and deg[b] < delta and rng.random() < extra:
            pairs.add((a, b))
            deg[a] += 1
            deg[b] += 1
    return _finish(rng, n, pairs, params)


MODELS = {
    "complete": _complete,
    "connected": _connected,
    "forest": _forest,
    "bipartite": _bipartite,
    "split": _split,
    "ktree": _ktree,
    "bounded-degree": _bounded_degree,
}


def generate(model: str, params: dict, seed: int) -> Instance:
    """Draw one instance of ``model``.

    Examples
    --------
    >>> inst = generate("complete", {"n": 5, "weights": "binary"}, 3)
    >>> inst.graph.is_complete()
    True
    """
    if model not in MODELS:
        raise InputError(f"unknown model {model!r}; choose from {', '.join(sorted(MODELS))}")
    return MODELS[model](random.Random(seed), dict(params))
