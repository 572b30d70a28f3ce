"""Homomorphisms of oriented and signed graphs: plain, pushable and switchable.

Push (switch) bits are never searched blindly. Fixing a vertex mapping turns
every arc into a parity constraint ``bit(u) XOR bit(v) = d`` which a parity
union-find settles in near-linear time.

Checking directability on a cycle basis is enough: for a mapping ``f`` let
``d(uv)`` be 1 when the image of arc ``uv`` points backwards. ``f`` is
pushable iff ``d`` is a cut, iff ``d`` sums to 0 around every cycle, iff it
sums to 0 around each fundamental cycle of a spanning forest. The sum of
``d`` around a closed walk is exactly the change in forward-arc parity
between the walk and its image, and arcs taken as 2-walks force adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import _csp
from .core import OrderedClosedWalk, OrientedGraph, classify_walk
from .errors import InputError, InvalidWalkError
from .parity import ParityUnionFind
from .pushequiv import _forest
from .signed import SignedGraph

DEFAULT_BUDGET = 10**7

MappingLike = Union[Sequence[int], Mapping[int, int]]


@dataclass(frozen=True)
class HomWitness:
    """A vertex mapping together with the push (or switch) set that makes it a plain homomorphism."""

    mapping: tuple[int, ...]
    modifier: frozenset[int]


def vertex_mapping(f: MappingLike, n_source: int, n_target: int) -> tuple[int, ...]:
    """Validate ``f`` as a total map ``0..n_source-1 -> 0..n_target-1``."""
    if isinstance(f, Mapping):
        missing = [v for v in range(n_source) if v not in f]
        if missing or len(f) != n_source:
            raise InputError(f"mapping must cover exactly vertices 0..{n_source - 1}")
        image = tuple(f[v] for v in range(n_source))
    else:
        image = tuple(f)
        if len(image) != n_source:
            raise InputError(f"mapping has {len(image)} entries, source has {n_source} vertices")
    for v, t in enumerate(image):
        if not isinstance(t, int) or not 0 <= t < n_target:
            raise InputError(f"image of {v} is {t!r}, outside 0..{n_target - 1}")
    return image


def is_homomorphism(g: OrientedGraph, h: OrientedGraph, f: MappingLike) -> bool:
    f = vertex_mapping(f, g.n, h.n)
    arcs = h.arc_set
    return all((f[u], f[v]) in arcs for u, v in g.arcs)


def _solve_parity(n: int, constraints: Iterable[tuple[int, int, Optional[int]]]) -> Optional[frozenset[int]]:
    uf = ParityUnionFind(n)
    for u, v, d in constraints:
        if d is None or not uf.union(u, v, d):
            return None
    return frozenset(v for v, b in enumerate(uf.normalized_bits()) if b)


def check_pushable_hom(g: OrientedGraph, h: OrientedGraph, f: MappingLike) -> Optional[frozenset[int]]:
    """Push set ``s`` with ``f`` a homomorphism of ``push(g, s)`` into ``h``, or ``None``.

    The returned set has bit 0 at the lowest vertex of every component of ``g``.
    """
    f = vertex_mapping(f, g.n, h.n)
    arcs = h.arc_set

    def constraints():
        for u, v in g.arcs:
            a, b = f[u], f[v]
            if (a, b) in arcs:
                yield u, v, 0
            elif (b, a) in arcs:
                yield u, v, 1
            else:
                yield u, v, None

    return _solve_parity(g.n, constraints())


def check_switchable_hom(sg: SignedGraph, ht: SignedGraph, f: MappingLike) -> Optional[frozenset[int]]:
    """Switch set ``s`` with ``f`` sign-preserving from ``switch(sg, s)`` to ``ht``, or ``None``."""
    f = vertex_mapping(f, sg.n, ht.n)

    def constraints():
        for u, v, x in sg.signed_edges:
            y = ht.sign(f[u], f[v]) if f[u] != f[v] else None
            yield u, v, (None if y is None else int(x != y))

    return _solve_parity(sg.n, constraints())


def fundamental_cycles(g: OrientedGraph) -> list[OrderedClosedWalk]:
    """One ordered cycle per non-forest edge ``uv`` (``u < v``): the forest path from ``u`` to ``v``, closed by ``vu``."""
    f = _forest(g.n, g.edges)
    depth = [0] * g.n
    for v in f.order:
        if f.parent[v] >= 0:
            depth[v] = depth[f.parent[v]] + 1
    tree = set(f.edges)
    walks = []
    for u, v in g.edges:
        if (u, v) in tree:
            continue
        up, down = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = f.parent[a]
            up.append(a)
        while depth[b] > depth[a]:
            b = f.parent[b]
            down.append(b)
        while a != b:
            a, b = f.parent[a], f.parent[b]
            up.append(a)
            down.append(b)
        walks.append(OrderedClosedWalk(tuple(up) + tuple(reversed(down[:-1]))))
    return walks


def default_basis(g: OrientedGraph) -> list[OrderedClosedWalk]:
    """Every arc as the 2-walk ``u v`` followed by the fundamental cycles."""
    return [OrderedClosedWalk((u, v)) for u, v in g.arcs] + fundamental_cycles(g)


def preserves_directability(
    g: OrientedGraph,
    h: OrientedGraph,
    f: MappingLike,
    basis: Optional[Iterable[OrderedClosedWalk]] = None,
) -> bool:
    """True iff ``f`` keeps the directability of every basis walk and maps every arc onto an adjacent pair."""
    f = vertex_mapping(f, g.n, h.n)
    walks = default_basis(g) if basis is None else list(basis)
    if basis is not None:
        walks = [OrderedClosedWalk((u, v)) for u, v in g.arcs] + walks
    for w in walks:
        source = classify_walk(g, w)
        try:
            image = classify_walk(h, OrderedClosedWalk(tuple(f[v] for v in w.vertices)))
        except InvalidWalkError:
            return False
        if image is not source:
            return False
    return True


def _oriented_tables(h: OrientedGraph) -> tuple[list[int], list[int]]:
    # value a = 2*colour + push bit; out_t[a]: head values allowed when the tail takes a
    t = h.n
    arcs = h.arc_set
    out_t, in_t = [0] * (2 * t), [0] * (2 * t)
    for c in range(t):
        for b in (0, 1):
            a = 2 * c + b
            for c2 in range(t):
                for b2 in (0, 1):
                    if (b == b2 and (c, c2) in arcs) or (b != b2 and (c2, c) in arcs):
                        out_t[a] |= 1 << (2 * c2 + b2)
                        in_t[2 * c2 + b2] |= 1 << a
    return out_t, in_t


def _signed_tables(ht: SignedGraph) -> dict[int, list[int]]:
    t = ht.n
    tables = {1: [0] * (2 * t), -1: [0] * (2 * t)}
    for c in range(t):
        for c2 in range(t):
            y = ht.sign(c, c2) if c != c2 else None
            if y is None:
                continue
            for b in (0, 1):
                for b2 in (0, 1):
                    seen = y if b == b2 else -y
                    tables[seen][2 * c + b] |= 1 << (2 * c2 + b2)
    return tables


def _lexmin(n: int, t: int, adj, roots: set[int], budget: _csp.Budget) -> Optional[list[int]]:
    # lexicographically least colour vector with some consistent push bits
    both = [3 << (2 * c) for c in range(t)]
    only0 = [1 << (2 * c) for c in range(t)]
    free = [sum(both) if v not in roots else sum(only0) for v in range(n)]

    def fixed(v: int, c: int) -> int:
        return only0[c] if v in roots else both[c]

    sol = _csp.solve(adj, free, budget)
    if sol is None:
        return None
    colours = [a >> 1 for a in sol]
    prefix: list[int] = []
    for i in range(n):
        for c in range(colours[i]):
            doms = [fixed(v, prefix[v]) for v in range(i)] + [fixed(i, c)] + free[i + 1 :]
            trial = _csp.solve(adj, doms, budget)
            if trial is not None:
                colours = [a >> 1 for a in trial]
                break
        prefix.append(colours[i])
    return prefix


def _roots(g) -> set[int]:
    f = _forest(g.n, g.edges)
    return {v for v in range(g.n) if f.parent[v] < 0}


def search_pushable_hom(
    g: OrientedGraph, h: OrientedGraph, budget: int = DEFAULT_BUDGET
) -> Optional[HomWitness]:
    """Lexicographically least pushable homomorphism of ``g`` into ``h``, or ``None``.

    The least mapping (vertex 0 first, smallest image first) is fixed one
    vertex at a time; each candidate prefix is tested for extendability by
    the backjumping solver. Exceeding ``budget`` search nodes raises
    :class:`~pushkit.errors.ResourceLimitError`.
    """
    if h.n == 0:
        if g.n == 0:
            return HomWitness((), frozenset())
        raise InputError("target graph has no vertices")
    out_t, in_t = _oriented_tables(h)
    adj = [[] for _ in range(g.n)]
    for u, v in g.arcs:
        adj[u].append((v, out_t))
        adj[v].append((u, in_t))
    colours = _lexmin(g.n, h.n, adj, _roots(g), _csp.Budget(budget))
    if colours is None:
        return None
    modifier = check_pushable_hom(g, h, colours)
    assert modifier is not None
    return HomWitness(tuple(colours), modifier)


def search_switchable_hom(
    sg: SignedGraph, ht: SignedGraph, budget: int = DEFAULT_BUDGET
) -> Optional[HomWitness]:
    """Signed counterpart of :func:`search_pushable_hom`; the modifier is a switch set."""
    if ht.n == 0:
        if sg.n == 0:
            return HomWitness((), frozenset())
        raise InputError("target graph has no vertices")
    tables = _signed_tables(ht)
    adj = [[] for _ in range(sg.n)]
    for u, v, x in sg.signed_edges:
        adj[u].append((v, tables[x]))
        adj[v].append((u, tables[x]))
    colours = _lexmin(sg.n, ht.n, adj, _roots(sg), _csp.Budget(budget))
    if colours is None:
        return None
    modifier = check_switchable_hom(sg, ht, colours)
    assert modifier is not None
    return HomWitness(tuple(colours), modifier)
