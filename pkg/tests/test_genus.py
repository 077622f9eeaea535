import itertools
import math
import random

import pytest

from totalgraph.embedding import RotationSystem, trace_faces, verify_embedding_components
from totalgraph.formulas import genus_complete, genus_complete_bipartite
from totalgraph.genus import (
    BudgetExhausted,
    embedding_at_genus,
    euler_lower_bound,
    exact_genus,
    girth,
    twin_classes,
)
from totalgraph.graph import (
    Graph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_union,
    is_connected,
)

from conftest import tgraph


def brute_force_genus(g: Graph) -> int:
    """Maximise faces over every rotation system (tiny graphs only)."""
    choices = []
    for v in g.vertices():
        nb = sorted(g.adj[v])
        if len(nb) <= 2:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + p for p in itertools.permutations(nb[1:])])
    best = 0
    for combo in itertools.product(*choices):
        best = max(best, len(trace_faces(g, RotationSystem(tuple(combo)))))
    return (2 - g.n + g.num_edges - best) // 2


def check(g, expected):
    ev = exact_genus(g)
    assert ev.exact and ev.genus == expected
    assert verify_embedding_components(g, ev.rotation) == expected
    return ev


@pytest.mark.parametrize("n", range(3, 8))
def test_complete_graphs(n):
    check(complete_graph(n), genus_complete(n))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 5) for n in range(m, 5)])
def test_complete_bipartite(m, n):
    check(complete_bipartite(m, n), genus_complete_bipartite(m, n))


def test_k8_is_two():
    check(complete_graph(8), 2)


def test_k2_x_k5_is_two():
    check(cartesian_product(complete_graph(2), complete_graph(5)), 2)


def test_additivity():
    g = graph_union(complete_graph(5), complete_bipartite(3, 3), complete_graph(3))
    ev = check(g, 2)
    assert [c.lower for c in ev.components] == [1, 1, 0]
    check(disjoint_union(3, complete_graph(5)), 3)


@pytest.mark.parametrize("expr,genus", [("Z9", 1), ("Z3[x]/(x^2)", 1), ("Z3xZ3", 1), ("Z2xZ4", 1), ("Z2xF4", 1), ("Z2xZ2xZ2", 1), ("Z2xZ3", 0), ("Z8", 0)])
def test_ring_genera(expr, genus):
    check(tgraph(expr), genus)


def random_connected(rng, n, p):
    while True:
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if is_connected(g):
            return g


def test_against_brute_force():
    rng = random.Random(2024)
    checked = 0
    while checked < 25:
        g = random_connected(rng, rng.randint(4, 7), rng.uniform(0.4, 0.9))
        work = math.prod(max(1, math.factorial(g.degree(v) - 1)) for v in g.vertices())
        if work > 30_000:
            continue
        assert exact_genus(g).genus == brute_force_genus(g), g.edges
        checked += 1


def test_budget_timeout():
    ev = exact_genus(complete_graph(8), budget=5)
    assert ev.verdict == "timed_out" and ev.upper is None and ev.rotation is None
    assert ev.lower >= 2  # the Euler bound still holds
    with pytest.raises(BudgetExhausted):
        embedding_at_genus(complete_graph(8), 2, budget=5)


def test_embedding_at_genus():
    k5 = complete_graph(5)
    assert embedding_at_genus(k5, 0) is None
    rho = embedding_at_genus(k5, 1)
    assert rho is not None and verify_embedding_components(k5, rho) == 1


def test_helpers():
    assert girth(complete_graph(4)) == 3
    assert girth(complete_bipartite(3, 3)) == 4
    assert girth(Graph(3, [(0, 1), (1, 2)])) == math.inf
    assert girth(cycle_graph(7)) == 7
    assert euler_lower_bound(complete_graph(8)) == 2
    assert euler_lower_bound(complete_bipartite(5, 4)) == 2  # girth 4: ceil((20 - 18 + 4) / 4)
    cls = twin_classes(complete_bipartite(2, 3))
    assert cls[0] == cls[1] and cls[2] == cls[3] == cls[4] and cls[0] != cls[2]
