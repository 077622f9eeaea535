import random

import pytest

from totalgraph.embedding import (
    DisconnectedInput,
    MalformedRotation,
    RotationSystem,
    format_rotation,
    parse_rotation,
    random_rotation,
    trace_faces,
    verify_embedding,
    verify_embedding_components,
)
from totalgraph.graph import Graph, complete_graph, cycle_graph, disjoint_union

from conftest import tgraph


def test_cycle_is_planar():
    c4 = cycle_graph(4)
    rho = RotationSystem.from_lists([sorted(c4.adj[v]) for v in c4.vertices()])
    assert verify_embedding(c4, rho) == 0
    assert len(trace_faces(c4, rho)) == 2


def test_k4_planar_and_toroidal_rotations():
    k4 = complete_graph(4)
    planar = RotationSystem.from_lists([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    assert len(trace_faces(k4, planar)) == 4
    assert verify_embedding(k4, planar) == 0
    torus = RotationSystem.from_lists([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    assert len(trace_faces(k4, torus)) == 2
    assert verify_embedding(k4, torus) == 1


def test_face_trace_partitions_darts():
    rng = random.Random(3)
    for expr in ("Z2xZ4", "Z3xZ3", "Z2xF4", "Z2xZ2xZ2"):
        g = tgraph(expr)
        rho = random_rotation(g, rng)
        faces = trace_faces(g, rho)
        darts = [d for f in faces for d in f]
        assert len(darts) == len(set(darts)) == 2 * g.num_edges
        succ = rho.successor()
        for f in faces:
            for (a, b), (c, d) in zip(f, f[1:] + f[:1]):
                assert c == b and d == succ[b][a]


def test_random_rotations_have_valid_genus():
    rng = random.Random(11)
    g = tgraph("Z2xZ4")
    for _ in range(50):
        genus = verify_embedding(g, random_rotation(g, rng))
        # at least one face, so 2 - V + E - F <= 2g gives an upper bound too
        assert 0 <= genus <= (2 - g.n + g.num_edges - 1) // 2


def test_rotation_text_round_trip():
    g = tgraph("Z2xZ2")
    rho = random_rotation(g, random.Random(0))
    text = format_rotation(g, rho)
    assert text.splitlines()[0].startswith("(0,0): ")
    assert parse_rotation(text, g) == rho


def test_unlabelled_graphs_use_indices():
    k4 = complete_graph(4)
    rho = random_rotation(k4, random.Random(0))
    assert parse_rotation(format_rotation(k4, rho), k4) == rho


@pytest.mark.parametrize(
    "text",
    [
        "0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1\n",  # missing neighbour
        "0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 1\n",  # repeated neighbour
        "0: 1 2 3\n0: 1 2 3\n",  # vertex twice
        "0 1 2 3\n",  # no colon
        "0: 1 2 9\n",  # unknown vertex
    ],
)
def test_malformed_rotation(text):
    with pytest.raises(MalformedRotation):
        parse_rotation(text, complete_graph(4))


def test_wrong_vertex_count():
    with pytest.raises(MalformedRotation):
        RotationSystem.from_lists([[1], [0]]).check(complete_graph(3))


def test_disconnected_input():
    g = disjoint_union(2, complete_graph(4))
    order = [[w for w in range(4 * (v // 4), 4 * (v // 4) + 4) if w != v] for v in g.vertices()]
    rho = RotationSystem.from_lists(order)
    with pytest.raises(DisconnectedInput):
        verify_embedding(g, rho)
    # each K4 with the "all increasing" rotation has genus 1
    assert verify_embedding_components(g, rho) == 2


def test_edgeless_graph():
    g = Graph(1, [])
    assert verify_embedding(g, RotationSystem(((),))) == 0
