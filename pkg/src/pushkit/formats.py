"""Plain-text graph formats and DOT export.

Three line-oriented formats share one layout: a header ``<kind> <n> <m>``
then ``m`` edge lines. ``#`` starts a comment; blank lines are ignored.

    oriented <n> <m>     lines ``u v``      (arc u -> v)
    signed <n> <m>       lines ``u v +|-``
    graph <n> <m>        lines ``u v``      (undirected edge)
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .core import OrientedGraph, SimpleGraph
from .errors import InputError
from .signed import POSITIVE, SignedGraph

AnyGraph = Union[OrientedGraph, SignedGraph, SimpleGraph]
KINDS = ("oriented", "signed", "graph")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {number}: expected an integer, got {token!r}") from None


def parse(text: str, expect: str = None) -> AnyGraph:
    """Parse any of the three formats; ``expect`` restricts the accepted header."""
    rows = list(_lines(text))
    if not rows:
        raise InputError("line 1: missing header")
    number, head = rows[0]
    if len(head) != 3 or head[0] not in KINDS:
        raise InputError(f"line {number}: header must be '<oriented|signed|graph> <n> <m>'")
    kind = head[0]
    if expect is not None and kind != expect:
        raise InputError(f"line {number}: expected a '{expect}' file, got '{kind}'")
    n, m = _int(head[1], number), _int(head[2], number)
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"line {number}: header announces {m} edges, found {len(body)}")
    width = 3 if kind == "signed" else 2
    items = []
    for number, tokens in body:
        if len(tokens) != width:
            raise InputError(f"line {number}: expected {width} fields, got {len(tokens)}")
        u, v = _int(tokens[0], number), _int(tokens[1], number)
        if kind == "signed":
            if tokens[2] not in ("+", "-"):
                raise InputError(f"line {number}: sign must be + or -, got {tokens[2]!r}")
            items.append((u, v, tokens[2]))
        else:
            items.append((u, v))
    try:
        return _build(kind, n, items)
    except InputError as exc:
        if n < 0 or not body:
            raise InputError(f"line {rows[0][0]}: {exc}") from None
        for i, (number, _) in enumerate(body):
            try:
                _build(kind, n, items[: i + 1])
            except InputError as exc:
                raise InputError(f"line {number}: {exc}") from None
        raise


def _build(kind: str, n: int, items) -> AnyGraph:
    if kind == "oriented":
        return OrientedGraph(n, items)
    if kind == "signed":
        return SignedGraph(n, items)
    return SimpleGraph(n, items)


def read(path: Union[str, Path], expect: str = None) -> AnyGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text, expect)


def dumps(g: AnyGraph) -> str:
    """Canonical text: edges ascending, one per line, trailing newline."""
    if isinstance(g, OrientedGraph):
        head, body = "oriented", [f"{u} {v}" for u, v in g.arcs]
    elif isinstance(g, SignedGraph):
        head = "signed"
        body = [f"{u} {v} {'+' if s == POSITIVE else '-'}" for u, v, s in g.signed_edges]
    elif isinstance(g, SimpleGraph):
        head, body = "graph", [f"{u} {v}" for u, v in g.edges]
    else:
        raise TypeError(f"cannot serialise {type(g).__name__}")
    return "\n".join([f"{head} {g.n} {len(body)}"] + body) + "\n"


def to_dot(g: AnyGraph) -> str:
    if isinstance(g, OrientedGraph):
        lines = ["digraph G {"] + [f"  {u} -> {v};" for u, v in g.arcs]
    elif isinstance(g, SignedGraph):
        lines = ["graph G {"] + [
            f'  {u} -- {v} [label="{"+" if s == POSITIVE else "-"}"{"" if s == POSITIVE else ", style=dashed"}];'
            for u, v, s in g.signed_edges
        ]
    else:
        lines = ["graph G {"] + [f"  {u} -- {v};" for u, v in g.edges]
    isolated = [v for v in range(g.n) if not g.neighbors[v]]
    lines += [f"  {v};" for v in isolated]
    return "\n".join(lines + ["}"]) + "\n"


def parse_vertex_list(text: str) -> list[int]:
    """Vertices separated by commas and/or whitespace."""
    out = []
    for number, tokens in _lines(text.replace(",", " ")):
        out += [_int(t, number) for t in tokens]
    return out


def parse_mapping(text: str) -> dict[int, int]:
    """``source,target`` lines."""
    mapping: dict[int, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise InputError(f"line {number}: expected 'source,target'")
        s, t = _int(parts[0], number), _int(parts[1], number)
        if s in mapping:
            raise InputError(f"line {number}: vertex {s} mapped twice")
        mapping[s] = t
    return mapping
