import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totalgraph.graph import (
    Graph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_union,
    relabel,
)
from totalgraph.iso import ISO_SIZE_CAP, SizeCapExceeded, is_isomorphic

from conftest import tgraph


def test_c4_k22():
    cert = is_isomorphic(cycle_graph(4), complete_bipartite(2, 2))
    assert cert and cert.verify(cycle_graph(4), complete_bipartite(2, 2))


def test_z6_prism():
    g = tgraph("Z2xZ3")
    prism = cartesian_product(complete_graph(2), complete_graph(3))
    cert = is_isomorphic(g, prism)
    assert cert and cert.verify(g, prism)


def test_non_isomorphic():
    assert is_isomorphic(complete_graph(4), complete_bipartite(2, 2)) is None
    # same degree sequence, different graphs
    assert is_isomorphic(cycle_graph(6), disjoint_union(2, cycle_graph(3))) is None


def test_z49():
    g = tgraph("Z49")
    target = graph_union(complete_graph(7), disjoint_union(3, complete_bipartite(7, 7)))
    assert is_isomorphic(g, target)


def test_cap():
    with pytest.raises(SizeCapExceeded):
        is_isomorphic(complete_graph(ISO_SIZE_CAP + 1), complete_graph(ISO_SIZE_CAP + 1))


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 11), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_relabel_invariance(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    perm = list(range(n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    cert = is_isomorphic(g, h)
    assert cert is not None and cert.verify(g, h)
    inv = cert.inverse()
    assert inv.verify(h, g)
    assert is_isomorphic(g, g).verify(g, g)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6))
def test_agrees_with_networkx(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, 0.5)
    h = random_graph(rng, n, 0.5)
    ng, nh = nx.Graph(), nx.Graph()
    ng.add_nodes_from(range(n))
    nh.add_nodes_from(range(n))
    ng.add_edges_from(g.edges)
    nh.add_edges_from(h.edges)
    assert (is_isomorphic(g, h) is not None) == nx.is_isomorphic(ng, nh)


def test_regular_hard_pair():
    # two 3-regular graphs on 8 vertices: the cube and the Moebius-Kantor-free Wagner graph
    cube = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)), complete_graph(2))
    wagner = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert is_isomorphic(cube, wagner) is None
    assert is_isomorphic(cube, relabel(cube, [3, 1, 4, 0, 5, 7, 2, 6]))


def test_label_mapping():
    cert = is_isomorphic(tgraph("Z2xZ2"), cycle_graph(4))
    labels = cert.as_labels(tgraph("Z2xZ2"), cycle_graph(4))
    assert set(labels) == {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}
