from fractions import Fraction

import pytest

from totalgraph.formulas import (
    cartesian_product_lower_bound,
    euler_edge_bound,
    genus_complete,
    genus_complete_bipartite,
    min_degree_excludes,
    min_degree_genus_bound,
)
from totalgraph.graph import complete_graph

from conftest import tgraph


@pytest.mark.parametrize("n,g", [(1, 0), (2, 0), (3, 0), (4, 0), (5, 1), (6, 1), (7, 1), (8, 2), (9, 3), (12, 6)])
def test_genus_complete(n, g):
    assert genus_complete(n) == g


@pytest.mark.parametrize("m,n,g", [(1, 9, 0), (2, 7, 0), (3, 3, 1), (3, 6, 1), (4, 4, 1), (5, 4, 2), (5, 5, 3), (7, 7, 7)])
def test_genus_complete_bipartite(m, n, g):
    assert genus_complete_bipartite(m, n) == genus_complete_bipartite(n, m) == g


def test_cartesian_bound():
    k2, k5 = complete_graph(2), complete_graph(5)
    # K2 x K5: max(2*1 + 0, 5*0 + 1) = 2
    assert cartesian_product_lower_bound(k2, k5, 0, 1) == 2
    assert cartesian_product_lower_bound(k2, complete_graph(4), 0, 0) == 0


def test_min_degree_bound():
    assert min_degree_genus_bound(9, 1) == 6
    assert min_degree_genus_bound(12, 0) == 5
    assert min_degree_genus_bound(6, 1) == 6
    assert min_degree_genus_bound(10, 2) == Fraction(36, 5)
    with pytest.raises(ValueError):
        min_degree_genus_bound(2, 0)


def test_min_degree_excludes():
    # K8 has degree 7 > 6 + 12/8 * 0 ... on the torus the bound is 6
    assert min_degree_excludes(complete_graph(8), 1)
    assert not min_degree_excludes(complete_graph(7), 1)
    assert not min_degree_excludes(tgraph("Z2xZ2xZ2"), 1)


def test_euler_edge_bound():
    assert euler_edge_bound(5, 10) == 1
    assert euler_edge_bound(8, 28) == 2
    assert euler_edge_bound(4, 6) == 0
