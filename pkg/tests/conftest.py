import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from pushkit.core import OrientedGraph  # noqa: E402
from pushkit.signed import SignedGraph  # noqa: E402

settings.register_profile("repro", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repro")


@st.composite
def oriented_graphs(draw, min_n=1, max_n=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = set()
    if connected:
        # random spanning tree first
        for v in range(1, n):
            chosen.add((draw(st.integers(0, v - 1)), v))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    chosen.update(extra)
    arcs = []
    for u, v in sorted(chosen):
        arcs.append((v, u) if draw(st.booleans()) else (u, v))
    return OrientedGraph(n, arcs)


@st.composite
def bipartite_oriented(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    chosen = sorted(set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))) if pairs else []
    arcs = [(v, u) if draw(st.booleans()) else (u, v) for u, v in chosen]
    a = frozenset(v for v in range(n) if side[v])
    return OrientedGraph(n, arcs), (a, frozenset(range(n)) - a)


@st.composite
def signed_graphs(draw, min_n=1, max_n=10):
    g = draw(oriented_graphs(min_n, max_n))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m))
    return SignedGraph(g.n, [(u, v, s) for (u, v), s in zip(g.edges, signs)])


def vertex_subsets(n):
    return st.frozensets(st.integers(0, n - 1), max_size=n) if n else st.just(frozenset())


# acceptance summary: one PASS/FAIL line per criterion

_CRITERIA: dict[str, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    _CRITERIA.setdefault(marker.args[0], []).append(
        f"{item.name} {'PASS' if report.passed else 'FAIL'} ({report.duration:.2f}s)"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "slow: exhaustive acceptance sweep")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda k: (int(str(k).split(".")[0]), str(k))):
        for line in _CRITERIA[key]:
            ok = line.split()[1]
            terminalreporter.write_line(f"criterion {key}: {ok}  {line}")
