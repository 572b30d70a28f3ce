"""Push equivalence: decision with witness, class counting and push-invariance."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Edge, OrientedGraph, SimpleGraph, push
from .errors import InputError, ResourceLimitError

log = logging.getLogger(__name__)

ENUMERATION_EDGE_CAP = 16
INVARIANCE_VERTEX_CAP = 8


@dataclass(frozen=True)
class SpanningForest:
    edges: tuple[Edge, ...]
    component: tuple[int, ...]
    parent: tuple[int, ...]  # -1 at component roots
    order: tuple[int, ...]  # BFS order; every parent precedes its children

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v in self.order if self.parent[v] < 0)


@dataclass(frozen=True)
class EquivalenceWitness:
    push_set: frozenset[int]


@lru_cache(maxsize=4096)
def _forest(n: int, edges: tuple[Edge, ...]) -> SpanningForest:
    nbrs = SimpleGraph(n, edges).neighbors
    parent = [-1] * n
    comp = [-1] * n
    order = []
    tree = []
    c = 0
    for root in range(n):
        if comp[root] >= 0:
            continue
        comp[root] = c
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in nbrs[x]:
                if comp[y] < 0:
                    comp[y] = c
                    parent[y] = x
                    tree.append((min(x, y), max(x, y)))
                    queue.append(y)
        c += 1
    return SpanningForest(tuple(sorted(tree)), tuple(comp), tuple(parent), tuple(order))


def spanning_forest(g) -> SpanningForest:
    """BFS spanning forest of the underlying graph.

    Each tree is grown from the lowest unvisited vertex with neighbours taken
    in ascending order, so the result is deterministic.
    """
    return _forest(g.n, tuple(g.edges))


def component_count(g) -> int:
    f = spanning_forest(g)
    return len(f.roots)


def _same_underlying(g1: OrientedGraph, g2: OrientedGraph) -> None:
    if g1.n != g2.n or g1.edges != g2.edges:
        raise InputError("the two orientations do not share an underlying graph")


def _align(g1: OrientedGraph, g2: OrientedGraph) -> tuple[list[int], Optional[tuple[int, int]]]:
    # push bits that carry g1's forest onto g2's, and the first arc they fail to match
    f = _forest(g1.n, g1.edges)
    a1, a2 = g1.arc_set, g2.arc_set
    bits = [0] * g1.n
    parent = f.parent
    for v in f.order:
        p = parent[v]
        if p >= 0:
            bits[v] = bits[p] ^ (((p, v) in a1) != ((p, v) in a2))
    for u, v in g1.arcs:
        if ((u, v) in a2) == (bits[u] != bits[v]):
            return bits, (u, v)
    return bits, None


def tree_align_push_set(t1: OrientedGraph, t2: OrientedGraph) -> frozenset[int]:
    """Push set carrying one orientation of a forest onto another.

    Each tree is rooted at its lowest vertex with push bit 0; a child's bit is
    its parent's bit, flipped when the two orientations disagree on their edge.
    """
    _same_underlying(t1, t2)
    if t1.m != t1.n - component_count(t1):
        raise InputError("tree_align_push_set needs a forest")
    bits, bad = _align(t1, t2)
    assert bad is None
    return frozenset(v for v, b in enumerate(bits) if b)


def decide_push_equivalent(g1: OrientedGraph, g2: OrientedGraph) -> Optional[EquivalenceWitness]:
    """Return the normalised push set taking ``g1`` to ``g2``, or ``None``.

    The spanning forest is aligned first; any non-forest arc that then points
    the wrong way closes a fundamental cycle whose directability differs, so
    no push set exists. The witness has bit 0 at each component's lowest vertex.
    """
    _same_underlying(g1, g2)
    bits, bad = _align(g1, g2)
    if bad is not None:
        log.debug("orientations disagree on the fundamental cycle through edge %s", bad)
        return None
    return EquivalenceWitness(frozenset(v for v, b in enumerate(bits) if b))


def inequivalence_edge(g1: OrientedGraph, g2: OrientedGraph) -> Optional[Edge]:
    """The non-forest edge whose fundamental cycle separates ``g1`` from ``g2``, if any."""
    _same_underlying(g1, g2)
    _, bad = _align(g1, g2)
    if bad is None:
        return None
    return (min(bad), max(bad))


def count_push_classes(g) -> int:
    """Number of push classes among orientations of the underlying graph: ``2**(m - n + c)``."""
    return 2 ** (len(g.edges) - g.n + component_count(g))


def _cut_space(g: SimpleGraph) -> list[int]:
    # edge bitmasks of every cut [S, V-S]; edge 0 is the most significant bit
    m = g.m
    index = {e: m - 1 - i for i, e in enumerate(g.edges)}
    roots = set(spanning_forest(g).roots)
    cuts = [0]
    for v in range(g.n):
        if v in roots:
            continue
        gen = 0
        for w in g.neighbors[v]:
            gen |= 1 << index[(min(v, w), max(v, w))]
        cuts += [c ^ gen for c in cuts]
    return cuts


def enumerate_push_classes(g) -> list[OrientedGraph]:
    """One representative per push class, by exhaustive push-set enumeration.

    All ``2**m`` orientations are walked in lexicographic order of their
    edge-direction vector (edges ascending, low-to-high first); each class is
    represented by its first member and marked off by applying every push set
    to it. Capped at ``m <= 16``.
    """
    g = SimpleGraph(g.n, g.edges)
    m = g.m
    if m > ENUMERATION_EDGE_CAP:
        raise ResourceLimitError(f"enumeration capped at {ENUMERATION_EDGE_CAP} edges, got {m}")
    cuts = _cut_space(g)
    seen = bytearray(1 << m)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        for c in cuts:
            seen[mask ^ c] = 1
        reps.append(g.orient(i for i in range(m) if mask >> (m - 1 - i) & 1))
    return reps


def _degree_signature(g: OrientedGraph) -> list[tuple[int, int]]:
    sig = [[0, 0] for _ in range(g.n)]
    for u, v in g.arcs:
        sig[u][1] += 1
        sig[v][0] += 1
    return [tuple(s) for s in sig]


def are_isomorphic(g1: OrientedGraph, g2: OrientedGraph) -> bool:
    """Directed-graph isomorphism by backtracking over vertex permutations.

    Candidates are pruned by (in-degree, out-degree). Meant for tiny graphs.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    s1, s2 = _degree_signature(g1), _degree_signature(g2)
    if sorted(s1) != sorted(s2):
        return False
    n = g1.n
    a1, a2 = g1.arc_set, g2.arc_set
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or s2[c] != s1[i]:
                continue
            ok = True
            for j in range(i):
                if ((i, j) in a1) != ((c, image[j]) in a2) or ((j, i) in a1) != ((image[j], c) in a2):
                    ok = False
                    break
            if not ok:
                continue
            image[i], used[c] = c, True
            if extend(i + 1):
                return True
            used[c] = False
        image[i] = -1
        return False

    return extend(0)


def is_push_invariant(g: OrientedGraph) -> bool:
    """True iff every orientation push equivalent to ``g`` is isomorphic to ``g``.

    Push sets containing vertex 0 are skipped (complement law). Needs a
    connected graph on at most 8 vertices.
    """
    if g.n > INVARIANCE_VERTEX_CAP:
        raise InputError(f"is_push_invariant handles at most {INVARIANCE_VERTEX_CAP} vertices")
    if g.n == 0 or component_count(g) != 1:
        raise InputError("is_push_invariant needs a connected graph")
    for mask in range(1 << (g.n - 1)):
        s = [v + 1 for v in range(g.n - 1) if mask >> v & 1]
        if not are_isomorphic(g, push(g, s)):
            return False
    return True
