import random

import networkx as nx
import pytest

from totalgraph.graph import (
    EmptySubset,
    Graph,
    GraphError,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    induced_subgraph,
    is_connected,
    min_degree,
    parse_edge_list,
    to_dot,
    to_edge_list,
    total_graph,
)
from totalgraph.iso import is_isomorphic

from conftest import ring, tgraph


def edge_labels(g):
    return {frozenset((g.labels[u], g.labels[v])) for u, v in g.edges}


def test_total_graph_z4():
    assert edge_labels(tgraph("Z4")) == {frozenset(("0", "2")), frozenset(("1", "3"))}


def test_total_graph_z2xz2_is_c4():
    assert is_isomorphic(tgraph("Z2xZ2"), cycle_graph(4))


def test_total_graph_f4_square_is_4k4():
    assert is_isomorphic(tgraph("F4[x]/(x^2)"), disjoint_union(4, complete_graph(4)))


@pytest.mark.parametrize("expr", ["Z12", "Z2xF4", "Z3[x]/(x^2)", "Z4[x]/(x^2+x+1)"])
def test_total_graph_definition(expr):
    r = ring(expr)
    g = total_graph(r)
    z = r.zero_divisor_members
    assert g.n == r.order
    for x in r.elements:
        for y in r.elements:
            if x != y:
                assert g.has_edge(x, y) == (r.add(x, y) in z) == g.has_edge(y, x)


def test_constructors():
    assert complete_graph(4).num_edges == 6
    k33 = complete_bipartite(3, 3)
    assert k33.num_edges == 9 and nx.is_bipartite(nx.Graph(k33.edges))
    k2222 = complete_multipartite([2, 2, 2, 2])
    assert (k2222.n, k2222.num_edges) == (8, 24)


def test_cartesian_product():
    prism = cartesian_product(complete_graph(2), complete_graph(3))
    assert prism.n == 6 and set(degree_sequence(prism)) == {3}
    for q in range(1, 8):
        g = cartesian_product(complete_graph(2), complete_graph(q))
        assert (g.n, g.num_edges) == (2 * q, q * (q - 1) + q)
    c5 = cycle_graph(5)
    assert is_isomorphic(cartesian_product(complete_graph(1), c5), c5)
    ours = cartesian_product(cycle_graph(4), complete_graph(3))
    theirs = nx.cartesian_product(nx.cycle_graph(4), nx.complete_graph(3))
    assert nx.is_isomorphic(nx.Graph(list(ours.edges)), theirs)


def test_unions_and_subgraphs():
    g = disjoint_union(2, complete_graph(4))
    assert (g.n, g.num_edges) == (8, 12)
    comps = connected_components(g)
    assert len(comps) == 2 and all(is_isomorphic(c, complete_graph(4)) for c in comps)
    with pytest.raises(EmptySubset):
        induced_subgraph(g, [])
    assert not is_connected(g)


def test_k33_inside_z3xz3():
    g = tgraph("Z3xZ3")
    rows = {r: [v for v in g.vertices() if g.labels[v].startswith(f"({r},")] for r in "12"}
    # every cross pair sums to (0, *), so rows 1 and 2 span a K3,3
    assert all(g.has_edge(u, v) for u in rows["1"] for v in rows["2"])
    # inside a row only (r,1)+(r,2) = (2r,0) is a zero-divisor
    sub = induced_subgraph(g, rows["1"] + rows["2"])
    assert sub.num_edges == 9 + 2


def test_min_degree_z9():
    g = tgraph("Z9")
    assert min_degree(g) == 2
    assert sorted(degree_sequence(g)) == [2, 2, 2, 3, 3, 3, 3, 3, 3]


def test_invalid_graphs():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])


def test_edge_list_round_trip():
    g = tgraph("Z2xZ4")
    back = parse_edge_list(to_edge_list(g))
    assert back == g and back.labels == g.labels
    assert to_edge_list(back) == to_edge_list(g)


def test_edge_list_plain():
    g = parse_edge_list("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert g.num_edges == 6


@pytest.mark.parametrize("text", ["0 1\n1 x\n", "0 0\n", "# vertices 2\n0 3\n", "1 2 3\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_edge_list_error_cites_line():
    with pytest.raises(GraphError, match="line 2"):
        parse_edge_list("0 1\nfoo\n")


def test_dot_export():
    dot = to_dot(cycle_graph(4))
    assert dot.count("--") == 4
    assert dot.count("[label=") == 4


def test_random_graph_components_match_networkx():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2]
        g = Graph(n, edges)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        assert len(connected_components(g)) == nx.number_connected_components(h)
