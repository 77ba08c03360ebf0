import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coverdom.graph import (
    Graph,
    GraphError,
    cartesian_product,
    complete,
    cycle,
    dodecahedron,
    from_edge_list,
    grid,
    parse_edge_list_text,
    parse_graph6,
    path,
    petersen,
    read_graph,
    stats,
    to_edge_list_text,
    to_graph6,
    write_graph,
)

from conftest import as_nx, random_connected_graph


def test_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g == cycle(3) == complete(3)
    assert g.adj == ((1, 2), (0, 2), (0, 1))


@pytest.mark.parametrize(
    "n, edges, msg",
    [
        (2, [(0, 0)], "self-loop"),
        (3, [(0, 1), (1, 0)], "duplicate"),
        (3, [(0, 1), (0, 1)], "duplicate"),
        (3, [(0, 3)], "outside"),
        (3, [(-1, 2)], "outside"),
    ],
)
def test_edge_list_errors(n, edges, msg):
    with pytest.raises(GraphError, match=msg):
        from_edge_list(n, edges)


def test_c5_degrees():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert [len(r) for r in g.adj] == [2] * 5


def test_malformed_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphError):
        Graph(3, ((2, 1), (0,), (0,)))


def test_cycle_too_small():
    with pytest.raises(GraphError):
        cycle(2)


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(as_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(as_nx(dodecahedron()), nx.dodecahedral_graph())


def test_petersen_and_dodecahedron_stats():
    assert stats(petersen()) == {
        "n": 10, "m": 15, "max_degree": 3, "min_degree": 3, "is_connected": True, "regularity": 3,
    }
    s = stats(dodecahedron())
    assert (s["n"], s["m"], s["regularity"], s["is_connected"]) == (20, 30, 3, True)


def test_single_vertex_stats():
    s = stats(from_edge_list(1, []))
    assert s["max_degree"] == s["min_degree"] == 0
    assert s["is_connected"]


def test_grid_edge_count():
    g = grid(5, 8)
    assert g.n == 40
    assert g.m == 5 * 7 + 8 * 4 == 67


def test_torus_c3_c3():
    g = cartesian_product(cycle(3), cycle(3))
    assert g.n == 9 and stats(g)["regularity"] == 4
    assert nx.is_isomorphic(as_nx(g), nx.cartesian_product(nx.cycle_graph(3), nx.cycle_graph(3)))


@pytest.mark.parametrize("a, b", [(3, 3), (4, 5), (3, 7)])
def test_product_of_cycles_is_4_regular(a, b):
    g = cartesian_product(cycle(a), cycle(b))
    assert g.n == a * b and set(g.degrees) == {4}


def test_product_degree_is_sum(rng):
    for _ in range(30):
        g1, g2 = random_connected_graph(rng, 1, 6), random_connected_graph(rng, 1, 6)
        prod = cartesian_product(g1, g2)
        for u in range(g1.n):
            for v in range(g2.n):
                assert prod.degree(u * g2.n + v) == g1.degree(u) + g2.degree(v)


def test_handshake_on_generated_graphs(rng):
    graphs = [petersen(), dodecahedron(), grid(5, 8), path(7), cycle(11)]
    graphs += [random_connected_graph(rng) for _ in range(50)]
    for g in graphs:
        assert sum(g.degrees) == 2 * g.m


def test_graph6_known_string():
    g = parse_graph6("D?{")
    assert g.edges() == sorted(nx.from_graph6_bytes(b"D?{").edges())
    assert to_graph6(g) == "D?{"


def test_graph6_triangle():
    g = parse_graph6(to_graph6(cycle(3)))
    assert g.m == 3


@pytest.mark.parametrize("bad", ["", "   ", "D?{x", "D?", "~", "C\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<" + to_graph6(petersen())) == petersen()


def test_graph6_roundtrip_random_corpus():
    rng = np.random.default_rng(6)
    for _ in range(200):
        n = int(rng.integers(0, 21))
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges)
        s = to_graph6(g)
        assert parse_graph6(s) == g
        assert s.encode() == nx.to_graph6_bytes(as_nx(g), header=False).strip()


def test_graph6_large_order_header():
    g = cycle(70)
    assert to_graph6(g)[0] == "~"
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
))
def test_graph6_roundtrip_property(data):
    n, pairs = data
    edges = {tuple(sorted(e)) for e in pairs if e[0] != e[1]}
    g = from_edge_list(n, sorted(edges))
    assert parse_graph6(to_graph6(g)) == g


def test_edge_list_text_roundtrip(tmp_path):
    g = petersen()
    assert parse_edge_list_text(to_edge_list_text(g)) == g
    write_graph(g, tmp_path / "p.txt", fmt="edgelist")
    write_graph(g, tmp_path / "p.g6")
    assert read_graph(tmp_path / "p.txt") == g == read_graph(tmp_path / "p.g6")


def test_edge_list_text_count_mismatch():
    with pytest.raises(GraphError):
        parse_edge_list_text("3 2\n0 1\n")


def test_components_and_induced():
    g = from_edge_list(5, [(0, 1), (3, 4)])
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    sub = petersen().induced([0, 1, 2, 3, 4])
    assert sub == cycle(5)
    assert sub.labels == (0, 1, 2, 3, 4)
