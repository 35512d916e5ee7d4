import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from convexcount.graph import Graph

# -- independent brute force (networkx components, frozensets) -------------


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def naive_cuts(g: Graph):
    """Every unordered bipartition as (shore with 0, other shore)."""
    rest = list(range(1, g.n))
    for size in range(1, g.n):
        for s1 in itertools.combinations(rest, size):
            s1 = frozenset(s1)
            yield frozenset(range(g.n)) - s1, s1


def naive_crossing(g: Graph, s1) -> frozenset:
    return frozenset(e for e in g.edges if (e[0] in s1) != (e[1] in s1))


def naive_is_cocircuit(g: Graph, s1) -> bool:
    h = to_nx(g)
    h.remove_edges_from(naive_crossing(g, s1))
    return nx.number_connected_components(h) == 2


def naive_cocircuit_count(g: Graph, size=None) -> int:
    return sum(
        1
        for _, s1 in naive_cuts(g)
        if naive_is_cocircuit(g, s1) and (size is None or len(naive_crossing(g, s1)) == size)
    )


def from_nx(h) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(mapping), tuple((mapping[u], mapping[v]) for u, v in h.edges))


def atlas_graphs(max_n=7, connected=True, max_edges=None):
    """All graphs on up to 7 vertices, one per isomorphism class."""
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        if max_edges is not None and h.number_of_edges() > max_edges:
            continue
        yield from_nx(h)


def labelled_graphs(n, connected=True):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if bits >> i & 1))
        if not connected or nx.is_connected(to_nx(g)):
            yield g


# -- hypothesis strategies ---------------------------------------------------


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n)))
    perm = draw(st.permutations(range(n)))
    return Graph(n, tuple(edges)).relabel(perm)


# -- acceptance summary ------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _markers.get(report.nodeid)
    if marker is not None:
        num, text = marker
        ok = report.passed and _criteria.get(num, (True,))[0]
        _criteria[num] = (ok, text)


_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        ok, text = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture
def k3():
    return Graph(3, ((0, 1), (0, 2), (1, 2)))


@pytest.fixture
def p3():
    return Graph(3, ((0, 1), (1, 2)))


@pytest.fixture
def c4():
    return Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
