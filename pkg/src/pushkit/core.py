"""Oriented graphs, the push operation, ordered closed walks and their classification."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import InputError, InvalidWalkError, ResourceLimitError

Arc = tuple[int, int]
Edge = tuple[int, int]

DEFAULT_CYCLE_CAP = 20


def vertex_set(n: int, members: Iterable[int]) -> frozenset[int]:
    """Validate a vertex subset of ``0..n-1`` and return it as a frozenset."""
    s = frozenset(members)
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise InputError(f"vertex {v!r} is outside 0..{n - 1}")
    return s


def _adjacency(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


def _check_count(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f"vertex count must be a non-negative integer, got {n!r}")


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``; edges stored as sorted ``(u, v)`` with ``u < v``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        _check_count(self.n)
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise InputError(f"duplicate edge {key}")
            norm.add(key)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def orient(self, reversed_edges: Iterable[int] = ()) -> "OrientedGraph":
        """Orient every edge low-to-high, except the edge indices listed in ``reversed_edges``."""
        flip = set(reversed_edges)
        return OrientedGraph(
            self.n, [(v, u) if i in flip else (u, v) for i, (u, v) in enumerate(self.edges)]
        )


@dataclass(frozen=True)
class OrientedGraph:
    """Oriented graph on vertices ``0..n-1``.

    Arcs are kept sorted, so two graphs with the same arcs compare equal.
    Loops, anti-parallel pairs and repeated arcs are rejected.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        _check_count(self.n)
        seen: set[Arc] = set()
        pairs: set[Edge] = set()
        for a in self.arcs:
            u, v = a
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc {tuple(a)} has an endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in pairs:
                if (u, v) in seen:
                    raise InputError(f"repeated arc ({u}, {v})")
                raise InputError(f"anti-parallel arcs between {key[0]} and {key[1]}")
            pairs.add(key)
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted((min(u, v), max(u, v)) for u, v in self.arcs))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set or (v, u) in self.arc_set

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a[0] == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a[1] == v)


@dataclass(frozen=True)
class OrderedClosedWalk:
    """Closed walk ``v1 v2 ... vk v1`` with a prescribed traversal order.

    The walk carries no graph; it is checked against the graph it is
    classified in.
    """

    vertices: tuple[int, ...] = field()

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 2:
            raise InputError("an ordered closed walk needs at least 2 vertices")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for i, v in enumerate(vs):
            yield v, vs[(i + 1) % len(vs)]

    def rotations(self) -> Iterator["OrderedClosedWalk"]:
        vs = self.vertices
        for i in range(len(vs)):
            yield OrderedClosedWalk(vs[i:] + vs[:i])


class Directability(enum.Enum):
    ODD_FORWARD = "OddForwardDirectable"
    ODD_BACKWARD = "OddBackwardDirectable"
    EVEN_DIRECTABLE = "EvenDirectable"
    EVEN_NON_DIRECTABLE = "EvenNonDirectable"

    def __str__(self) -> str:
        return self.value


class Balance(enum.Enum):
    BALANCED = "Balanced"
    UNBALANCED = "Unbalanced"

    def __str__(self) -> str:
        return self.value


def push(g: OrientedGraph, s: Iterable[int]) -> OrientedGraph:
    """Push every vertex of ``s`` once: reverse exactly the arcs of the cut ``[s, V - s]``."""
    s = vertex_set(g.n, s)
    return OrientedGraph(g.n, [(v, u) if (u in s) != (v in s) else (u, v) for u, v in g.arcs])


def complement(n: int, s: Iterable[int]) -> frozenset[int]:
    return frozenset(range(n)) - vertex_set(n, s)


def cut_arcs(g: OrientedGraph, s: Iterable[int]) -> list[Arc]:
    """Arcs with exactly one endpoint in ``s``, ascending."""
    s = vertex_set(g.n, s)
    return [(u, v) for u, v in g.arcs if (u in s) != (v in s)]


def walk_parities(g: OrientedGraph, w: OrderedClosedWalk) -> tuple[int, int]:
    """Return ``(forward, backward)`` arc counts of ``w`` traversed in ``g``.

    Repeated edges count with multiplicity.
    """
    arcs = g.arc_set
    forward = backward = 0
    for u, v in w.steps():
        if (u, v) in arcs:
            forward += 1
        elif (v, u) in arcs:
            backward += 1
        else:
            raise InvalidWalkError(f"no arc between {u} and {v}")
    return forward, backward


def path_forward_count(g: OrientedGraph, path: Iterable[int]) -> int:
    """Forward arcs along an open path ``p0 p1 ... pr`` (traversed from ``p0``)."""
    path = list(path)
    count = 0
    for u, v in zip(path, path[1:]):
        if g.has_arc(u, v):
            count += 1
        elif not g.has_arc(v, u):
            raise InvalidWalkError(f"no arc between {u} and {v}")
    return count


def classify_walk(g: OrientedGraph, w: OrderedClosedWalk) -> Directability:
    forward, _ = walk_parities(g, w)
    if len(w) % 2:
        return Directability.ODD_FORWARD if forward % 2 else Directability.ODD_BACKWARD
    return Directability.EVEN_NON_DIRECTABLE if forward % 2 else Directability.EVEN_DIRECTABLE


def balance_of_even_cycle(g: OrientedGraph, w: OrderedClosedWalk) -> Balance:
    """Balanced iff some push makes forward and backward counts equal.

    That happens exactly when the forward count has the parity of half the
    length: directable of length 4n, or non-directable of length 4n+2.
    """
    if len(w) % 2:
        raise InputError(f"balance is defined for even walks only, got length {len(w)}")
    forward, _ = walk_parities(g, w)
    if forward % 2 == (len(w) // 2) % 2:
        return Balance.BALANCED
    return Balance.UNBALANCED


def conjugate(w: OrderedClosedWalk) -> OrderedClosedWalk:
    vs = w.vertices
    return OrderedClosedWalk((vs[0],) + tuple(reversed(vs[1:])))


def underlying_bipartition(g) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """2-colour the underlying graph; each component's lowest vertex goes to ``A``.

    Works for any graph object exposing ``n`` and ``neighbors``. Returns
    ``None`` when some component has an odd cycle.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    return a, frozenset(range(g.n)) - a


def simple_cycles(g, max_vertices: Optional[int] = DEFAULT_CYCLE_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle of the underlying graph once, as a vertex sequence.

    Each cycle starts at its lowest vertex and is oriented so that its second
    vertex is smaller than its last. Exhaustive, so capped by vertex count.
    """
    if max_vertices is not None and g.n > max_vertices:
        raise ResourceLimitError(
            f"cycle enumeration capped at {max_vertices} vertices, graph has {g.n}"
        )
    nbrs = g.neighbors
    for start in range(g.n):
        path = [start]
        on_path = {start}
        stack = [iter(nbrs[start])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if nxt == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                continue
            if nxt < start or nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            stack.append(iter(nbrs[nxt]))


def girth(g) -> Optional[int]:
    """Shortest cycle length of the underlying graph, or ``None`` for a forest.

    Breadth-first search from every vertex; exact for simple graphs.
    """
    best = None
    nbrs = g.neighbors
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in nbrs[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def unbalanced_girth(
    g: OrientedGraph, max_vertices: Optional[int] = DEFAULT_CYCLE_CAP
) -> Optional[int]:
    """Shortest unbalanced even cycle, or ``None``. Odd cycles are never counted."""
    best = None
    for cyc in simple_cycles(g, max_vertices):
        if len(cyc) % 2 or (best is not None and len(cyc) >= best):
            continue
        if balance_of_even_cycle(g, OrderedClosedWalk(cyc)) is Balance.UNBALANCED:
            best = len(cyc)
    return best
