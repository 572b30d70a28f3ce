"""Signed graphs, switching, and the associated oriented/signed constructions for bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .core import (
    Edge,
    OrderedClosedWalk,
    OrientedGraph,
    SimpleGraph,
    _adjacency,
    _check_count,
    underlying_bipartition,
    vertex_set,
)
from .errors import InputError, InvalidWalkError
from .pushequiv import _forest

POSITIVE = 1
NEGATIVE = -1

Partition = tuple[frozenset[int], frozenset[int]]


def _sign(s) -> int:
    if s in (1, "+"):
        return POSITIVE
    if s in (-1, "-"):
        return NEGATIVE
    raise InputError(f"sign must be + or -, got {s!r}")


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph with a sign (``+1`` or ``-1``) on each edge.

    Edges are stored as sorted ``(u, v, sign)`` triples with ``u < v``.
    """

    n: int
    signed_edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        _check_count(self.n)
        norm: dict[Edge, int] = {}
        for u, v, s in self.signed_edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise InputError(f"duplicate edge {key}")
            norm[key] = _sign(s)
        object.__setattr__(
            self, "signed_edges", tuple((u, v, s) for (u, v), s in sorted(norm.items()))
        )

    @property
    def m(self) -> int:
        return len(self.signed_edges)

    @cached_property
    def signs(self) -> dict[Edge, int]:
        return {(u, v): s for u, v, s in self.signed_edges}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u, v, _ in self.signed_edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.edges)

    def sign(self, u: int, v: int) -> Optional[int]:
        """Sign of edge ``uv``, or ``None`` when absent."""
        return self.signs.get((min(u, v), max(u, v)))

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)


def switch(sg: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``s``."""
    s = vertex_set(sg.n, s)
    return SignedGraph(
        sg.n, [(u, v, -x if (u in s) != (v in s) else x) for u, v, x in sg.signed_edges]
    )


def sign_of_walk(sg: SignedGraph, w: OrderedClosedWalk) -> int:
    total = POSITIVE
    for u, v in w.steps():
        x = sg.sign(u, v)
        if x is None:
            raise InvalidWalkError(f"no edge between {u} and {v}")
        total *= x
    return total


def decide_switch_equivalent(sg1: SignedGraph, sg2: SignedGraph) -> Optional[frozenset[int]]:
    """Switch set taking ``sg1`` to ``sg2`` (bit 0 at each component's lowest vertex), or ``None``.

    Works on any signed graph, bipartite or not.
    """
    if sg1.n != sg2.n or sg1.edges != sg2.edges:
        raise InputError("the two signatures do not share an underlying graph")
    f = _forest(sg1.n, sg1.edges)
    s1, s2 = sg1.signs, sg2.signs
    bits = [0] * sg1.n
    for v in f.order:
        p = f.parent[v]
        if p >= 0:
            key = (min(p, v), max(p, v))
            bits[v] = bits[p] ^ (s1[key] != s2[key])
    for key, x in s1.items():
        u, v = key
        if (x != s2[key]) != (bits[u] != bits[v]):
            return None
    return frozenset(v for v, b in enumerate(bits) if b)


def _partition(g, part: Optional[Partition]) -> Partition:
    if part is None:
        part = underlying_bipartition(g)
        if part is None:
            raise InputError("underlying graph is not bipartite")
        return part
    a, b = vertex_set(g.n, part[0]), vertex_set(g.n, part[1])
    if a & b or len(a | b) != g.n:
        raise InputError("partition must split the vertex set into two disjoint parts")
    for u, v in g.edges:
        if (u in a) == (v in a):
            raise InputError(f"edge ({u}, {v}) lies inside one part")
    return a, b


def to_oriented(sg: SignedGraph, part: Optional[Partition] = None) -> OrientedGraph:
    """Associated oriented graph: positive edges run A to B, negative edges B to A."""
    a, _ = _partition(sg, part)
    arcs = []
    for u, v, x in sg.signed_edges:
        if v in a:
            u, v = v, u
        arcs.append((u, v) if x == POSITIVE else (v, u))
    return OrientedGraph(sg.n, arcs)


def to_signed(g: OrientedGraph, part: Optional[Partition] = None) -> SignedGraph:
    """Associated signed graph: arcs from A to B become positive, arcs from B to A negative."""
    a, _ = _partition(g, part)
    return SignedGraph(g.n, [(u, v, POSITIVE if u in a else NEGATIVE) for u, v in g.arcs])
