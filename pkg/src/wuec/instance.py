"""Line-oriented text format shared by every problem.

::

    # comment
    p <tag> <n> <m> <scale>      tag in {wuec, wssf, extwssf, is}
    e <u> <v> <weight>           1-based vertex ids, weight * scale integral
    o <v1> ... <vn>              optional k-tree construction order
    f <u> <v>                    optional forced edge

Weights are decimals (``1.5``) or fractions (``3/2``); the scale turns
them into exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional

from .errors import InputError, ParseError
from .graph import ForcedStarPacking, WeightedGraph

__all__ = ["Instance", "parse_instance", "emit_instance", "read_instance", "write_instance", "TAGS"]

TAGS = ("wuec", "wssf", "extwssf", "is")


@dataclass(frozen=True)
class Instance:
    tag: str
    graph: WeightedGraph
    scale: int = 1
    order: Optional[tuple] = None
    forced: frozenset = frozenset()  # edge ids

    def forced_packing(self) -> ForcedStarPacking:
        return ForcedStarPacking(self.graph, self.forced)


def _int(tok, line, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line) from None


def _weight(tok, scale, line):
    try:
        if "/" in tok:
            val = Fraction(tok)
        else:
            val = Fraction(Decimal(tok))
    except (ValueError, InvalidOperation, ZeroDivisionError):
        raise ParseError(f"bad weight {tok!r}", line) from None
    if val < 0:
        raise ParseError(f"negative weight {tok}", line)
    val *= scale
    if val.denominator != 1:
        raise ParseError(f"weight {tok} times scale {scale} is not an integer", line)
    return int(val)


def parse_instance(text: str) -> Instance:
    """Parse instance text; every error names the offending line."""
    header = None
    edges, seen = [], {}
    order = None
    forced_pairs = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "p":
            if header is not None:
                raise ParseError("second header line", no)
            if len(tok) != 5:
                raise ParseError("header must read 'p <tag> <n> <m> <scale>'", no)
            if tok[1] not in TAGS:
                raise ParseError(f"unknown problem tag {tok[1]!r}", no)
            n, m, scale = (_int(t, no, w) for t, w in zip(tok[2:], ("n", "m", "scale")))
            if n < 0 or m < 0 or scale < 1:
                raise ParseError("n, m must be non-negative and scale positive", no)
            header = (tok[1], n, m, scale)
            continue
        if header is None:
            raise ParseError("data before the 'p' header", no)
        n, scale = header[1], header[3]
        if kind in ("e", "f"):
            want = 4 if kind == "e" else 3
            if len(tok) != want:
                raise ParseError(f"'{kind}' line needs {want - 1} fields", no)
            u, v = _int(tok[1], no, "vertex"), _int(tok[2], no, "vertex")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} out of range 1..{n}", no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", no)
            key = (min(u, v) - 1, max(u, v) - 1)
            if kind == "e":
                if key in seen:
                    raise ParseError(f"duplicate edge {u} {v} (first on line {seen[key]})", no)
                seen[key] = no
                edges.append((u - 1, v - 1, _weight(tok[3], scale, no)))
            else:
                forced_pairs.append((key, no))
        elif kind == "o":
            if order is not None:
                raise ParseError("second order line", no)
            order = tuple(_int(t, no, "vertex") - 1 for t in tok[1:])
            if sorted(order) != list(range(n)):
                raise ParseError("order must list every vertex exactly once", no)
        else:
            raise ParseError(f"unknown line type {kind!r}", no)
    if header is None:
        raise ParseError("missing 'p' header")
    tag, n, m, scale = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    g = WeightedGraph(n, edges)
    forced = set()
    for key, no in forced_pairs:
        if not g.has_edge(*key):
            raise ParseError(f"forced edge {key[0] + 1} {key[1] + 1} is not an edge", no)
        forced.add(g.edge_id(*key))
    inst = Instance(tag, g, scale, order, frozenset(forced))
    if forced:
        try:
            inst.forced_packing()
        except InputError as exc:
            raise ParseError(f"forced edges: {exc}") from None
    return inst


def _fmt_weight(w, scale):
    val = Fraction(w, scale)
    if val.denominator == 1:
        return str(val.numerator)
    d = val.denominator
    k = next((k for k in range(1, 65) if (10 ** k) % d == 0), None)
    if k is None:  # not a terminating decimal
        return f"{val.numerator}/{d}"
    digits = str(val.numerator * (10 ** k // d)).rjust(k + 1, "0")
    return (digits[:-k] + "." + digits[-k:]).rstrip("0")


def emit_instance(inst: Instance) -> str:
    g = inst.graph
    out = [f"p {inst.tag} {g.n} {g.m} {inst.scale}"]
    for u, v, w in g.edges:
        out.append(f"e {u + 1} {v + 1} {_fmt_weight(w, inst.scale)}")
    if inst.order is not None:
        out.append("o " + " ".join(str(v + 1) for v in inst.order))
    for e in sorted(inst.forced):
        u, v = g.endpoints(e)
        out.append(f"f {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path, inst: Instance):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_instance(inst))
