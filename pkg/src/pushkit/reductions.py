"""Target graphs, the S(G) and odd-cycle gadget constructions, and reduction verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import homo
from ._csp import Budget
from .core import Edge, OrientedGraph, SimpleGraph, push
from .errors import InputError, ReductionViolation, ResourceLimitError

ALLOWED_COLORS_MAX_K = 3


@dataclass(frozen=True)
class GadgetMap:
    """Where each source edge went: its even path ``P`` and odd path ``P'``, endpoints included."""

    source: SimpleGraph
    k: Optional[int]
    paths: dict[Edge, tuple[tuple[int, ...], tuple[int, ...]]] = field(hash=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "n_original": self.source.n,
                "edges": {
                    f"{u}-{v}": {"P": list(p), "P_prime": list(q)}
                    for (u, v), (p, q) in sorted(self.paths.items())
                },
            },
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str, source: SimpleGraph) -> "GadgetMap":
        data = json.loads(text)
        paths = {}
        for key, entry in data["edges"].items():
            u, v = (int(x) for x in key.split("-"))
            paths[(u, v)] = (tuple(entry["P"]), tuple(entry["P_prime"]))
        return cls(source, data["k"], paths)


def directed_cycle(n: int) -> OrientedGraph:
    if n < 3:
        raise InputError(f"a directed cycle needs at least 3 vertices, got {n}")
    return OrientedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def unbalanced_c4() -> OrientedGraph:
    """The 4-cycle 0,1,2,3 with three forward arcs."""
    return OrientedGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def build_k_star(k: int) -> OrientedGraph:
    """``K_{k,k}`` with the matching ``i -> k+i`` pointing A to B and every other edge B to A."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    arcs = [(i, k + i) for i in range(k)]
    arcs += [(k + j, i) for i in range(k) for j in range(k) if i != j]
    return OrientedGraph(2 * k, arcs)


def build_s_graph(g: SimpleGraph) -> tuple[OrientedGraph, GadgetMap]:
    """Replace every edge ``uv`` by the unbalanced 4-cycle ``u -> a -> v -> b <- u``.

    Originals keep their ids; ``a`` and ``b`` are numbered edge by edge.
    """
    arcs = []
    paths = {}
    nxt = g.n
    for u, v in g.edges:
        a, b = nxt, nxt + 1
        nxt += 2
        arcs += [(u, a), (a, v), (v, b), (u, b)]
        paths[(u, v)] = ((u, a, v), (u, b, v))
    return OrientedGraph(nxt, arcs), GadgetMap(g, None, paths)


def build_gadget(g: SimpleGraph, k: int) -> tuple[OrientedGraph, GadgetMap]:
    """Replace every edge ``uv`` by two internally disjoint paths of length ``4k``.

    ``P`` is directed from ``u`` to ``v``; ``P'`` is too except that its last
    arc points from ``v`` back into the path, giving ``4k - 1`` forward arcs.
    Internal vertices are numbered edge by edge, ``P`` before ``P'``.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    inner = 4 * k - 1
    arcs = []
    paths = {}
    nxt = g.n
    for u, v in g.edges:
        p = (u,) + tuple(range(nxt, nxt + inner)) + (v,)
        nxt += inner
        q = (u,) + tuple(range(nxt, nxt + inner)) + (v,)
        nxt += inner
        arcs += list(zip(p, p[1:]))
        arcs += list(zip(q[:-2], q[1:-1]))
        arcs.append((v, q[-2]))
        paths[(u, v)] = (p, q)
    return OrientedGraph(nxt, arcs), GadgetMap(g, k, paths)


def canonical_path(path_type: str, k: int) -> OrientedGraph:
    """Stand-alone ``P`` or ``P'`` on vertices ``0..4k``, traversed from 0."""
    if path_type not in ("P", "P'"):
        raise InputError(f"path type must be 'P' or \"P'\", got {path_type!r}")
    length = 4 * k
    arcs = [(i, i + 1) for i in range(length)]
    if path_type == "P'":
        arcs[-1] = (length, length - 1)
    return OrientedGraph(length + 1, arcs)


def allowed_colors(path_type: str, k: int, max_k: int = ALLOWED_COLORS_MAX_K) -> frozenset[int]:
    """End colours reachable on a ``P`` / ``P'`` path coloured into the directed ``(2k+1)``-cycle.

    The start vertex has colour 0 and is never pushed; every subset of the
    ``4k - 1`` internal vertices is pushed in turn, after which colours are
    forced along the path (+1 per forward arc, -1 per backward arc).
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if k > max_k:
        raise ResourceLimitError(f"brute force over 2^{4 * k - 1} push sets exceeds k <= {max_k}")
    path = canonical_path(path_type, k)
    length = 4 * k
    mod = 2 * k + 1
    colours = set()
    for mask in range(1 << (length - 1)):
        pushed = push(path, [i + 1 for i in range(length - 1) if mask >> i & 1])
        c = 0
        for i in range(length):
            c += 1 if pushed.has_arc(i, i + 1) else -1
        colours.add(c % mod)
    return frozenset(colours)


def degeneracy_order(g: SimpleGraph) -> list[int]:
    """Repeatedly strip a minimum-degree vertex (lowest id on ties); return the reverse strip order."""
    deg = [len(a) for a in g.neighbors]
    alive = set(range(g.n))
    stripped = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        alive.remove(v)
        stripped.append(v)
        for w in g.neighbors[v]:
            if w in alive:
                deg[w] -= 1
    return stripped[::-1]


def k_colorable(g: SimpleGraph, k: int, budget: int = homo.DEFAULT_BUDGET) -> Optional[list[int]]:
    """Proper ``k``-colouring by backtracking, or ``None``.

    Vertices are coloured in degeneracy order with the smallest colour first,
    so the result is the lexicographically least colouring along that order.
    """
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    order = degeneracy_order(g)
    colour = [-1] * g.n
    counter = Budget(budget)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[w] for w in g.neighbors[v]}
        for c in range(k):
            if c in taken:
                continue
            counter.tick()
            colour[v] = c
            if extend(i + 1):
                return True
        colour[v] = -1
        return False

    return colour if extend(0) else None


@dataclass(frozen=True)
class ReductionReport:
    """Both legs of a colouring reduction on one instance."""

    kind: str
    colors: int
    coloring: Optional[list[int]] = field(hash=False)
    witness: Optional[homo.HomWitness]

    @property
    def colorable(self) -> bool:
        return self.coloring is not None

    @property
    def hom_found(self) -> bool:
        return self.witness is not None

    def lines(self) -> list[str]:
        yes = {True: "yes", False: "no"}
        out = [
            f"reduction: {self.kind}",
            f"colors: {self.colors}",
            f"colorable: {yes[self.colorable]}",
            f"hom: {yes[self.hom_found]}",
            "biconditional: holds",
        ]
        if self.coloring is not None:
            out.append("coloring: " + ",".join(map(str, self.coloring)))
        if self.witness is not None:
            out.append("hom-map: " + ",".join(map(str, self.witness.mapping)))
        return out


def _proper(g: SimpleGraph, colouring) -> bool:
    return all(colouring[u] != colouring[v] for u, v in g.edges)


def verify_coloring_reduction(
    g: SimpleGraph, k: int, budget: int = homo.DEFAULT_BUDGET
) -> ReductionReport:
    """Check ``g`` is ``(2k+1)``-colourable iff its gadget maps pushably onto the directed ``(2k+1)``-cycle.

    When both hold, the homomorphism restricted to the original vertices must
    itself be a proper colouring. Any mismatch raises :class:`ReductionViolation`.
    """
    colours = 2 * k + 1
    colouring = k_colorable(g, colours, budget)
    gadget, _ = build_gadget(g, k)
    witness = homo.search_pushable_hom(gadget, directed_cycle(colours), budget)
    if (colouring is None) != (witness is None):
        raise ReductionViolation(
            f"{colours}-colorable={colouring is not None} but gadget hom={witness is not None}"
        )
    if witness is not None and not _proper(g, witness.mapping[: g.n]):
        raise ReductionViolation("gadget homomorphism restricted to original vertices is not proper")
    return ReductionReport("gadget", colours, colouring, witness)


def verify_k_star_reduction(
    g: SimpleGraph, k: int, budget: int = homo.DEFAULT_BUDGET
) -> ReductionReport:
    """Check ``chi(g) <= k`` iff ``S(g)`` maps pushably onto ``K*_{k,k}``."""
    colouring = k_colorable(g, k, budget)
    s_graph, _ = build_s_graph(g)
    witness = homo.search_pushable_hom(s_graph, build_k_star(k), budget)
    if (colouring is None) != (witness is None):
        raise ReductionViolation(
            f"{k}-colorable={colouring is not None} but S(G) hom={witness is not None}"
        )
    return ReductionReport("k-star", k, colouring, witness)


def w_graph() -> OrientedGraph:
    """The 7-vertex critical graph: ``v1..v4`` are 0..3 and ``u1..u3`` are 4..6."""
    v1, v2, v3, v4, u1, u2, u3 = range(7)
    return OrientedGraph(
        7,
        [(v1, u1), (v1, u2), (v1, u3), (u1, v2), (v2, u2), (u2, v3), (v3, u3), (v4, u1), (u3, v4)],
    )


def critical_density_bound(n: int) -> Fraction:
    """Edge lower bound ``4n/3`` met by every unbalanced-C4 critical graph other than W."""
    return Fraction(4 * n, 3)


@dataclass(frozen=True)
class CriticalityReport:
    has_hom: bool
    isolated: tuple[int, ...]
    deletions: tuple[tuple[tuple[int, int], Optional[homo.HomWitness]], ...]

    @property
    def critical(self) -> bool:
        return (
            not self.has_hom
            and not self.isolated
            and all(w is not None for _, w in self.deletions)
        )

    def lines(self) -> list[str]:
        out = [f"hom: {'yes' if self.has_hom else 'no'}"]
        if self.isolated:
            out.append("isolated: " + ",".join(map(str, self.isolated)))
        for (u, v), w in self.deletions:
            out.append(f"delete {u} {v}: {'hom' if w is not None else 'no-hom'}")
        out.append("CRITICAL" if self.critical else "NOT-CRITICAL")
        return out


def verify_critical(
    g: OrientedGraph, h: OrientedGraph, budget: int = homo.DEFAULT_BUDGET
) -> CriticalityReport:
    """Decide whether ``g`` is pushably ``h``-critical.

    ``g`` must have no pushable homomorphism to ``h`` while every graph with
    one arc removed has one. Any proper subgraph sits inside an arc-deleted
    one, except when ``g`` has an isolated vertex, which alone spoils
    criticality (dropping it leaves a non-colourable proper subgraph).
    """
    if homo.search_pushable_hom(g, h, budget) is not None:
        return CriticalityReport(True, (), ())
    isolated = tuple(v for v in range(g.n) if not g.neighbors[v])
    if isolated:
        return CriticalityReport(False, isolated, ())
    deletions = []
    for arc in g.arcs:
        sub = OrientedGraph(g.n, [a for a in g.arcs if a != arc])
        deletions.append((arc, homo.search_pushable_hom(sub, h, budget)))
    return CriticalityReport(False, (), tuple(deletions))
