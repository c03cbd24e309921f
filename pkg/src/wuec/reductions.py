"""Gadget constructions mapping Independent Set / MaxWSSF instances to
Weighted Upper Edge Cover instances, with solution maps in both directions.

Vertex layout of every target is fixed:

bipartite  ``v_i`` = i, ``v_{i,1}`` = n+2i, ``v_{i,2}`` = n+2i+1,
           edge midpoint of source edge k = 3n+k
split      ``c_i`` = i, ``c'_i`` = n+i, ``p_k`` = 2n+k, ``t_i`` = 2n+m+i
ktree      ``v'`` = v, ``v_{e,i}`` = n + e(n-1) + (i-1) for i = 1..n-1
complete   same vertices as the source

Source edges are taken in edge-id order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classes import is_bipartite, is_independent_set, is_split
from .errors import InputError, NotAKTree
from .exact import Budget, alpha_exact, uec_exact, wssf_exact
from .graph import (
    MinimalEdgeCover,
    StarForest,
    WeightedGraph,
    any_minimal_edge_cover,
    attach_trivials,
    check_cycle_inequality,
    edge_set,
    is_minimal_edge_cover,
    star_forest_decompose,
)
from .ktree import ktree_recognize

__all__ = [
    "ReductionCertificate",
    "CertificateReport",
    "reduce_is_to_bipartite",
    "reduce_is_to_split",
    "reduce_is_to_ktree",
    "reduce_wssf_to_complete",
    "map_back_bipartite",
    "map_back_split",
    "map_back_ktree",
    "normalize_ktree_cover",
    "restrict_complete_cover",
    "lift_star_forest",
    "lift_independent_set",
    "verify_certificate",
    "REDUCTIONS",
]

IDENTITIES = {
    "bipartite": "alpha-equals-uec",
    "split": "alpha-equals-uec",
    "ktree": "uec-equals-(m+alpha)(n-1)",
    "complete": "uec-equals-wssf",
}


@dataclass(frozen=True)
class ReductionCertificate:
    kind: str
    source: WeightedGraph
    target: WeightedGraph
    vertex_map: tuple  # label of every target vertex
    edge_map: tuple  # label of every target edge
    identity: str
    params: dict = field(default_factory=dict, hash=False)

    def to_dict(self):
        return {
            "kind": self.kind,
            "identity": self.identity,
            "params": dict(self.params),
            "source": _graph_dict(self.source),
            "target": _graph_dict(self.target),
            "vertex_map": [list(x) for x in self.vertex_map],
            "edge_map": [list(x) for x in self.edge_map],
        }

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(
                d["kind"],
                _graph_from(d["source"]),
                _graph_from(d["target"]),
                tuple(tuple(x) for x in d["vertex_map"]),
                tuple(tuple(x) for x in d["edge_map"]),
                d["identity"],
                dict(d["params"]),
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed certificate: {exc}") from None


def _graph_dict(g):
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _graph_from(d):
    return WeightedGraph(d["n"], [tuple(e) for e in d["edges"]])


def _require_source(g, min_n=1):
    if g.n < min_n or g.m < 1:
        raise InputError(f"source must have at least {min_n} vertices and one edge")
    if not g.is_connected():
        raise InputError("source graph must be connected")


def reduce_is_to_bipartite(g: WeightedGraph):
    """Subdivide every edge and hang a weighted ``P_3`` on every vertex."""
    _require_source(g)
    n, m = g.n, g.m
    labels = [("v", i) for i in range(n)]
    for i in range(n):
        labels += [("v1", i), ("v2", i)]
    labels += [("mid", k) for k in range(m)]
    edges, emap = [], []
    for i in range(n):
        edges.append((i, n + 2 * i, 1))
        emap.append(("pendant1", i))
        edges.append((n + 2 * i, n + 2 * i + 1, 0))
        emap.append(("pendant2", i))
    for k, (a, b, _) in enumerate(g.edges):
        edges.append((a, 3 * n + k, 0))
        emap.append(("half", k, a))
        edges.append((b, 3 * n + k, 0))
        emap.append(("half", k, b))
    h = WeightedGraph(3 * n + m, edges)
    cert = ReductionCertificate("bipartite", g, h, tuple(labels), tuple(emap),
                                IDENTITIES["bipartite"], {"n": n, "m": m})
    return h, cert


def reduce_is_to_split(g: WeightedGraph):
    """Clique on two copies of ``V`` (weight 1 across copies), edge vertices
    on the first copy, one pendant per vertex of the second copy."""
    _require_source(g)
    n, m = g.n, g.m
    labels = ([("c", i) for i in range(n)] + [("c'", i) for i in range(n)]
              + [("p", k) for k in range(m)] + [("t", i) for i in range(n)])
    edges, emap = [], []
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            cross = (a < n) != (b < n)
            edges.append((a, b, 1 if cross else 0))
            emap.append(("cross", a, b - n) if cross else ("clique", a, b))
    for k, (a, b, _) in enumerate(g.edges):
        edges.append((a, 2 * n + k, 0))
        emap.append(("p", k, a))
        edges.append((b, 2 * n + k, 0))
        emap.append(("p", k, b))
    for i in range(n):
        edges.append((n + i, 2 * n + m + i, 0))
        emap.append(("t", i))
    h = WeightedGraph(3 * n + m, edges)
    cert = ReductionCertificate("split", g, h, tuple(labels), tuple(emap),
                                IDENTITIES["split"], {"n": n, "m": m})
    return h, cert


def _ktree_gadget(n, e):
    return [n + e * (n - 1) + i for i in range(n - 1)]


def reduce_is_to_ktree(g: WeightedGraph):
    """``K_n`` of weight ``n-1`` plus ``n-1`` stacked vertices per source edge.

    Vertex ``v_{e,i}`` sees both endpoint copies (weight 1), the earlier
    ``v_{e,j}`` and the ``n-i-1`` smallest remaining clique vertices
    (weight 0), so every addition attaches to an ``n``-clique.
    """
    _require_source(g, min_n=3)
    n, m = g.n, g.m
    labels = [("v'", i) for i in range(n)]
    labels += [("ve", k, i) for k in range(m) for i in range(1, n)]
    edges, emap = [], []
    for a in range(n):
        for b in range(a + 1, n):
            edges.append((a, b, n - 1))
            emap.append(("core", a, b))
    for k, (u, v, _) in enumerate(g.edges):
        gadget = _ktree_gadget(n, k)
        rest = [x for x in range(n) if x not in (u, v)]
        for i, x in enumerate(gadget, start=1):
            edges.append((u, x, 1))
            emap.append(("end", k, i, u))
            edges.append((v, x, 1))
            emap.append(("end", k, i, v))
            for j in range(1, i):
                edges.append((gadget[j - 1], x, 0))
                emap.append(("stack", k, i, j))
            for c in rest[: n - i - 1]:
                edges.append((c, x, 0))
                emap.append(("fill", k, i, c))
    h = WeightedGraph(n + m * (n - 1), edges)
    cert = ReductionCertificate("ktree", g, h, tuple(labels), tuple(emap),
                                IDENTITIES["ktree"], {"n": n, "m": m, "k": n})
    return h, cert


def reduce_wssf_to_complete(g: WeightedGraph):
    """Complete ``g`` with zero-weight edges."""
    n = g.n
    edges, emap = [], []
    for a in range(n):
        for b in range(a + 1, n):
            if g.has_edge(a, b):
                e = g.edge_id(a, b)
                edges.append((a, b, g.weight(e)))
                emap.append(("source", e))
            else:
                edges.append((a, b, 0))
                emap.append(("fill",))
    h = WeightedGraph(n, edges)
    cert = ReductionCertificate("complete", g, h, tuple(("v", i) for i in range(n)), tuple(emap),
                                IDENTITIES["complete"], {"n": n, "m": g.m})
    return h, cert


REDUCTIONS = {
    "bipartite": reduce_is_to_bipartite,
    "split": reduce_is_to_split,
    "ktree": reduce_is_to_ktree,
    "complete": reduce_wssf_to_complete,
}


def _check_cover(cert, cover):
    if isinstance(cover, MinimalEdgeCover):
        cover = cover.edges
    s = edge_set(cert.target, cover)
    if not is_minimal_edge_cover(cert.target, s):
        raise InputError("not a minimal edge cover of the certificate target")
    return s


def map_back_bipartite(cert: ReductionCertificate, cover) -> frozenset:
    """Source vertices whose weight-1 pendant edge is in the cover."""
    s = _check_cover(cert, cover)
    h, src = cert.target, cert.source
    out = frozenset(i for i in range(src.n) if h.edge_id(i, src.n + 2 * i) in s)
    assert is_independent_set(src, out)
    assert len(out) >= h.total(s)
    return out


def map_back_split(cert: ReductionCertificate, cover) -> frozenset:
    """Source vertices ``i`` with some weight-1 edge ``c_i c'_j`` in the cover."""
    s = _check_cover(cert, cover)
    h, src = cert.target, cert.source
    n = src.n
    out = set()
    for e in s:
        a, b = h.endpoints(e)
        if a < n <= b < 2 * n:
            out.add(a)
    out = frozenset(out)
    assert is_independent_set(src, out)
    assert len(out) >= h.total(s)
    return out


class _Forest:
    """Leaf -> centre bookkeeping for the k-tree normalisation."""

    def __init__(self, g, sf):
        self.g = g
        self.parent = dict(sf.parent)
        self.kids = {c: set(ls) for c, ls in sf.star_leaves.items()}

    def is_center(self, x):
        return bool(self.kids.get(x))

    def make_center(self, x):
        """Try to view ``x`` as a centre, flipping a single-edge star if needed."""
        if self.is_center(x):
            return True
        p = self.parent.get(x)
        if p is not None and len(self.kids[p]) == 1:
            del self.parent[x]
            self.kids[p] = set()
            self.parent[p] = x
            self.kids.setdefault(x, set()).add(p)
            return True
        return False

    def detach(self, x):
        if x in self.parent:
            self.kids[self.parent.pop(x)].discard(x)
        for k in self.kids.pop(x, set()):
            del self.parent[k]

    def hang(self, leaf, center):
        self.parent[leaf] = center
        self.kids.setdefault(center, set()).add(leaf)

    def edges(self):
        return frozenset(self.g.edge_id(v, c) for v, c in self.parent.items())

    def weight(self):
        return self.g.total(self.edges())


def normalize_ktree_cover(cert: ReductionCertificate, cover):
    """Rewrite a minimal edge cover of the k-tree gadget into normal form.

    Rule (a): for every source edge one endpoint copy is a centre.
    Rule (b): every gadget vertex of edge ``uv`` is a leaf of ``u'`` or ``v'``.
    Isolated clique vertices are finally hung on the smallest clique centre.
    Returns ``(normal_cover, weights)`` where ``weights`` lists the cover
    weight after every step; the sequence never decreases.
    """
    if cert.kind != "ktree":
        raise InputError("certificate is not a k-tree reduction")
    s = _check_cover(cert, cover)
    h, src = cert.target, cert.source
    n = src.n
    f = _Forest(h, star_forest_decompose(h, s))
    weights = [f.weight()]

    def rewire(k, t, drop_t):
        gadget = _ktree_gadget(n, k)
        for x in gadget:
            f.detach(x)
        if drop_t:
            f.detach(t)
        for x in gadget:
            f.hang(x, t)
        weights.append(f.weight())
        assert weights[-1] >= weights[-2], "normalisation lost weight"

    def pick_t(k, u, v):
        gadget = set(_ktree_gadget(n, k))
        if f.parent.get(u) in gadget:
            return u
        if f.parent.get(v) in gadget:
            return v
        return u

    for k, (u, v, _) in enumerate(src.edges):
        if not (f.make_center(u) or f.make_center(v)):
            rewire(k, pick_t(k, u, v), True)
    for k, (u, v, _) in enumerate(src.edges):
        if f.make_center(u):
            rewire(k, u, False)
        elif f.make_center(v):
            rewire(k, v, False)
        else:
            rewire(k, pick_t(k, u, v), True)
    centers = [c for c in range(n) if f.is_center(c)]
    for x in range(n):
        if x not in f.parent and not f.is_center(x):
            f.hang(x, centers[0])
    weights.append(f.weight())
    assert weights[-1] >= weights[-2]
    edges = f.edges()
    assert is_minimal_edge_cover(h, edges)
    return MinimalEdgeCover(h, edges, h.total(edges)), weights


def map_back_ktree(cert: ReductionCertificate, cover) -> frozenset:
    """Independent set of the source read off the normalised cover: the
    clique copies that ended up as leaves."""
    normal, _ = normalize_ktree_cover(cert, cover)
    src = cert.source
    n, m = src.n, src.m
    sf = star_forest_decompose(cert.target, normal.edges)
    leaves = frozenset(v for v in range(n) if v in sf.parent and sf.parent[v] < n)
    assert is_independent_set(src, leaves)
    assert normal.weight == (m + len(leaves)) * (n - 1)
    return leaves


def restrict_complete_cover(cert: ReductionCertificate, cover) -> StarForest:
    """Drop fill edges: a spanning star forest of the source of equal weight."""
    s = _check_cover(cert, cover)
    kept = {cert.edge_map[e][1] for e in s if cert.edge_map[e][0] == "source"}
    sf = star_forest_decompose(cert.source, kept)
    assert sf.weight == cert.target.total(s)
    return sf


def lift_star_forest(cert: ReductionCertificate, sf: StarForest) -> MinimalEdgeCover:
    """Source star forest -> minimal edge cover of the completion, no lighter."""
    h = cert.target
    edges = {h.edge_id(*cert.source.endpoints(e)) for e in sf.edges}
    if not edges:
        return any_minimal_edge_cover(h)
    lifted = attach_trivials(h, star_forest_decompose(h, edges))
    assert lifted.weight >= sf.weight
    return lifted


def lift_independent_set(cert: ReductionCertificate, iset) -> MinimalEdgeCover:
    """Independent set of the source -> minimal cover of the target.

    The cover weighs at least ``|I|`` (bipartite, split) or
    ``(m + |I|)(n - 1)`` (k-tree).
    """
    src, h = cert.source, cert.target
    iset = set(iset)
    if not is_independent_set(src, iset):
        raise InputError("vertex set is not independent in the source")
    n = src.n
    pick = [min(x for x in (a, b) if x not in iset) for a, b, _ in src.edges]
    used = set(pick)
    edges = set()
    if cert.kind == "bipartite":
        for i in range(n):
            edges.add(h.edge_id(n + 2 * i, n + 2 * i + 1))
            if i in iset or i not in used:
                edges.add(h.edge_id(i, n + 2 * i))
        for k, x in enumerate(pick):
            edges.add(h.edge_id(x, 3 * n + k))
        bound = len(iset)
    elif cert.kind == "split":
        m = src.m
        for i in range(n):
            edges.add(h.edge_id(n + i, 2 * n + m + i))
            if i in iset or i not in used:
                edges.add(h.edge_id(i, n + i))
        for k, x in enumerate(pick):
            edges.add(h.edge_id(x, 2 * n + k))
        bound = len(iset)
    elif cert.kind == "ktree":
        for k, x in enumerate(pick):
            for y in _ktree_gadget(n, k):
                edges.add(h.edge_id(x, y))
        r = pick[0]
        for v in range(n):
            if v not in used:
                edges.add(h.edge_id(r, v))
        bound = (src.m + len(iset)) * (n - 1)
    else:
        raise InputError(f"no independent-set lift for {cert.kind!r} certificates")
    cover = MinimalEdgeCover.from_edges(h, edges)
    assert cover.weight >= bound
    return cover


@dataclass
class CertificateReport:
    kind: str
    identity: str
    lhs: int
    rhs: int
    equal: bool
    class_ok: bool
    alphabet_ok: bool
    cycle_inequality: Optional[bool] = None

    @property
    def ok(self):
        return self.equal and self.class_ok and self.alphabet_ok and self.cycle_inequality is not False

    def to_dict(self):
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def _class_ok(cert):
    h = cert.target
    if cert.kind == "bipartite":
        return is_bipartite(h)
    if cert.kind == "split":
        return is_split(h)
    if cert.kind == "ktree":
        try:
            ktree_recognize(h, cert.params["k"])
        except NotAKTree:
            return False
        return True
    return h.is_complete()


def _alphabet_ok(cert):
    ws = {w for _, _, w in cert.target.edges}
    if cert.kind in ("bipartite", "split"):
        return ws <= {0, 1}
    if cert.kind == "ktree":
        return ws <= {0, 1, cert.params["n"] - 1}
    return True


def verify_certificate(cert: ReductionCertificate, budget: Optional[Budget] = None) -> CertificateReport:
    """Evaluate both sides of the certificate's identity with exact oracles."""
    src, h = cert.source, cert.target
    rhs = uec_exact(h, budget).value
    if cert.kind in ("bipartite", "split"):
        lhs = alpha_exact(src, budget).value
    elif cert.kind == "ktree":
        lhs = (src.m + alpha_exact(src, budget).value) * (src.n - 1)
    elif cert.kind == "complete":
        lhs = wssf_exact(src, budget).value
    else:
        raise InputError(f"unknown certificate kind {cert.kind!r}")
    cyc = check_cycle_inequality(h)[0] if cert.kind in ("bipartite", "split") else None
    return CertificateReport(cert.kind, cert.identity, lhs, rhs, lhs == rhs,
                             _class_ok(cert), _alphabet_ok(cert), cyc)
