"""``pushkit`` command-line front end.

Exit codes: 0 success or yes, 1 no, 2 input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import core, formats, homo, pushequiv, reductions, signed
from .core import OrderedClosedWalk, OrientedGraph
from .errors import InputError, ReductionViolation, ResourceLimitError
from .signed import SignedGraph

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(v) for v in sorted(s)) + "}"


def _default_budget() -> int:
    raw = os.environ.get("PUSHKIT_BUDGET")
    if raw is None:
        return homo.DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"PUSHKIT_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("PUSHKIT_BUDGET must be positive")
    return value


def _budget(args) -> int:
    if args.budget is not None:
        if args.budget < 1:
            raise InputError("--budget must be positive")
        return args.budget
    return _default_budget()


def _vertices(text: str) -> list[int]:
    return formats.parse_vertex_list(text)


def _partition(g, path: Optional[str]):
    if path is None:
        return None
    try:
        a = frozenset(formats.parse_vertex_list(Path(path).read_text()))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return a, frozenset(range(g.n)) - a


class _Runner:
    def __init__(self, out: TextIO, err: TextIO):
        self.out, self.err = out, err

    def say(self, *lines: str) -> None:
        for line in lines:
            self.out.write(line + "\n")

    def graph(self, g, dot: bool = False) -> None:
        self.out.write(formats.to_dot(g) if dot else formats.dumps(g))

    # --- core ---------------------------------------------------------------

    def cmd_push(self, a):
        g = formats.read(a.file, "oriented")
        self.graph(core.push(g, _vertices(a.set)), a.dot)
        return EXIT_OK

    def cmd_cut(self, a):
        g = formats.read(a.file, "oriented")
        for u, v in core.cut_arcs(g, _vertices(a.set)):
            self.say(f"{u} {v}")
        return EXIT_OK

    def cmd_classify_walk(self, a):
        g = formats.read(a.file, "oriented")
        w = OrderedClosedWalk(tuple(_vertices(a.walk)))
        forward, backward = core.walk_parities(g, w)
        self.say(f"{core.classify_walk(g, w)} forward={forward} backward={backward}")
        return EXIT_OK

    def cmd_balance(self, a):
        g = formats.read(a.file, "oriented")
        self.say(str(core.balance_of_even_cycle(g, OrderedClosedWalk(tuple(_vertices(a.walk))))))
        return EXIT_OK

    def cmd_girth(self, a):
        g = formats.read(a.file, "oriented")
        cap = None if a.max_vertices == 0 else a.max_vertices
        gi, ug = core.girth(g), core.unbalanced_girth(g, cap)
        self.say(f"girth: {'none' if gi is None else gi}")
        self.say(f"unbalanced-girth: {'none' if ug is None else ug}")
        return EXIT_OK

    # --- pushequiv ----------------------------------------------------------

    def cmd_equiv(self, a):
        g1 = formats.read(a.file1, "oriented")
        g2 = formats.read(a.file2, "oriented")
        w = pushequiv.decide_push_equivalent(g1, g2)
        if w is None:
            self.say("NOT-EQUIVALENT")
            edge = pushequiv.inequivalence_edge(g1, g2)
            self.err.write(f"fundamental cycle through edge {edge[0]} {edge[1]} differs\n")
            return EXIT_NO
        self.say(f"EQUIVALENT push-set: {_fmt_set(w.push_set)}")
        return EXIT_OK

    def cmd_classes(self, a):
        g = formats.read(a.file)
        self.say(str(pushequiv.count_push_classes(g)))
        if a.enumerate:
            for i, rep in enumerate(pushequiv.enumerate_push_classes(g)):
                self.say(f"# class {i}")
                self.graph(rep)
        return EXIT_OK

    def cmd_invariant(self, a):
        g = formats.read(a.file, "oriented")
        if pushequiv.is_push_invariant(g):
            self.say("PUSH-INVARIANT")
            return EXIT_OK
        self.say("NOT-PUSH-INVARIANT")
        return EXIT_NO

    # --- signed -------------------------------------------------------------

    def cmd_to_signed(self, a):
        g = formats.read(a.file, "oriented")
        self.graph(signed.to_signed(g, _partition(g, a.partition)), a.dot)
        return EXIT_OK

    def cmd_to_oriented(self, a):
        sg = formats.read(a.file, "signed")
        self.graph(signed.to_oriented(sg, _partition(sg, a.partition)), a.dot)
        return EXIT_OK

    def cmd_sequiv(self, a):
        s1 = formats.read(a.file1, "signed")
        s2 = formats.read(a.file2, "signed")
        w = signed.decide_switch_equivalent(s1, s2)
        if w is None:
            self.say("NOT-EQUIVALENT")
            return EXIT_NO
        self.say(f"EQUIVALENT switch-set: {_fmt_set(w)}")
        return EXIT_OK

    # --- homo ---------------------------------------------------------------

    def _pair(self, a):
        g, h = formats.read(a.g), formats.read(a.h)
        if isinstance(g, OrientedGraph) and isinstance(h, OrientedGraph):
            return g, h, False
        if isinstance(g, SignedGraph) and isinstance(h, SignedGraph):
            return g, h, True
        raise InputError("hom commands need two oriented or two signed graphs")

    def cmd_hom_check(self, a):
        g, h, is_signed = self._pair(a)
        try:
            mapping = formats.parse_mapping(Path(a.map).read_text())
        except OSError as exc:
            raise InputError(f"cannot read {a.map}: {exc.strerror}") from None
        if is_signed:
            s = homo.check_switchable_hom(g, h, mapping)
            label, kind = "SWITCHABLE-HOM", "switch-set"
        else:
            s = homo.check_pushable_hom(g, h, mapping)
            label, kind = "PUSHABLE-HOM", "push-set"
        if s is None:
            self.say(f"NOT-{label}")
            return EXIT_NO
        self.say(f"{label} {kind}: {_fmt_set(s)}")
        return EXIT_OK

    def cmd_hom_search(self, a):
        g, h, is_signed = self._pair(a)
        search = homo.search_switchable_hom if is_signed else homo.search_pushable_hom
        w = search(g, h, _budget(a))
        if w is None:
            self.say("NOT-FOUND")
            return EXIT_NO
        self.say("FOUND", f"{'switch-set' if is_signed else 'push-set'}: {_fmt_set(w.modifier)}")
        self.say(*(f"{v},{t}" for v, t in enumerate(w.mapping)))
        return EXIT_OK

    # --- reductions ---------------------------------------------------------

    def cmd_gadget(self, a):
        g = formats.read(a.file, "graph")
        gadget, gmap = reductions.build_gadget(g, a.k)
        if a.map:
            Path(a.map).write_text(gmap.to_json() + "\n")
        self.graph(gadget, a.dot)
        return EXIT_OK

    def cmd_s_graph(self, a):
        g = formats.read(a.file, "graph")
        s, gmap = reductions.build_s_graph(g)
        if a.map:
            Path(a.map).write_text(gmap.to_json() + "\n")
        self.graph(s, a.dot)
        return EXIT_OK

    def cmd_k_star(self, a):
        self.graph(reductions.build_k_star(a.K), a.dot)
        return EXIT_OK

    def cmd_verify_reduction(self, a):
        g = formats.read(a.file, "graph")
        verify = (
            reductions.verify_k_star_reduction
            if a.kind == "k-star"
            else reductions.verify_coloring_reduction
        )
        self.say(*verify(g, a.k, _budget(a)).lines())
        return EXIT_OK

    def cmd_verify_critical(self, a):
        g = formats.read(a.g, "oriented")
        h = formats.read(a.h, "oriented")
        report = reductions.verify_critical(g, h, _budget(a))
        self.say(*report.lines())
        return EXIT_OK if report.critical else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pushkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, *files, dot=False, budget=False):
        sp = sub.add_parser(name)
        for f in files:
            sp.add_argument(f)
        if dot:
            sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of text")
        if budget:
            sp.add_argument("--budget", type=int, default=None, help="search node budget")
        sp.set_defaults(handler="cmd_" + name.replace("-", "_"))
        return sp

    add("push", "file", dot=True).add_argument("--set", required=True, help="e.g. 0,2")
    add("cut", "file").add_argument("--set", required=True)
    add("classify-walk", "file").add_argument("--walk", required=True, help="e.g. 0,1,2")
    add("balance", "file").add_argument("--walk", required=True)
    add("girth", "file").add_argument(
        "--max-vertices", type=int, default=core.DEFAULT_CYCLE_CAP, help="0 removes the cap"
    )
    add("equiv", "file1", "file2")
    add("classes", "file").add_argument("--enumerate", action="store_true")
    add("invariant", "file")
    add("to-signed", "file", dot=True).add_argument("--partition")
    add("to-oriented", "file", dot=True).add_argument("--partition")
    add("sequiv", "file1", "file2")
    add("hom-check", "g", "h").add_argument("--map", required=True)
    add("hom-search", "g", "h", budget=True)
    sp = add("gadget", "file", dot=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--map")
    add("s-graph", "file", dot=True).add_argument("--map")
    add("k-star", dot=True).add_argument("K", type=int)
    sp = add("verify-reduction", "file", budget=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kind", choices=("gadget", "k-star"), default="gadget")
    add("verify-critical", "g", "h", budget=True)
    return p


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    runner = _Runner(out, err)
    try:
        return getattr(runner, args.handler)(args)
    except InputError as exc:
        err.write(f"pushkit: error: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        err.write(f"pushkit: budget: {exc}\n")
        return EXIT_BUDGET
    except ReductionViolation as exc:
        out.write(f"VIOLATION: {exc}\n")
        return EXIT_NO


def main() -> None:
    sys.exit(run())
