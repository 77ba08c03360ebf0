import networkx as nx
import numpy as np
import pytest

from coverdom.graph import from_edge_list


def random_connected_graph(rng, nmin=1, nmax=12):
    """Random spanning tree plus G(n, p) edges with a random density."""
    n = int(rng.integers(nmin, nmax + 1))
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    p = rng.uniform(0.05, 0.6)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return from_edge_list(n, sorted(edges))


def random_cubic_graph(rng, nmax=14):
    while True:
        n = int(rng.choice(np.arange(4, nmax + 1, 2)))
        g = from_edge_list(n, nx.random_regular_graph(3, n, seed=int(rng.integers(2**31))).edges())
        if g.is_connected():
            return g


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


# one pass/fail line per acceptance criterion in the terminal summary
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _criteria.get(label, "PASS")
        _criteria[label] = "PASS" if prev == "PASS" and rep.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[label]}  {label}")
