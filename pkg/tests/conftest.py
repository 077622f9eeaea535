import pytest

from totalgraph.graph import total_graph
from totalgraph.ring import build_ring
from totalgraph.ringexpr import parse_ring_expression


def ring(expr):
    return build_ring(parse_ring_expression(expr))


def tgraph(expr):
    return total_graph(ring(expr))


@pytest.fixture
def build():
    return ring
