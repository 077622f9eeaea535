"""Planarity with certificates: a planar rotation system or a Kuratowski subdivision."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .embedding import RotationSystem
from .evidence import SubdivisionWitness
from .genus import DEFAULT_BUDGET, BudgetExhausted, embedding_at_genus, euler_lower_bound
from .graph import Graph, complete_bipartite, complete_graph, component_vertex_sets, induced_subgraph
from .subdivision import DEFAULT_SUBDIVISION_BUDGET, find_subdivision

KURATOWSKI = (("K5", complete_graph(5), 1), ("K3,3", complete_bipartite(3, 3), 1))


class PlanarityUndecided(RuntimeError):
    pass


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: Optional[RotationSystem] = None
    witness: Optional[SubdivisionWitness] = None


def planar_rotation(g: Graph, budget: int = DEFAULT_BUDGET) -> Optional[RotationSystem]:
    """A genus-0 rotation system for every component, or ``None`` if some component is non-planar."""
    order: list[tuple[int, ...]] = [()] * g.n
    for verts in component_vertex_sets(g):
        sub = induced_subgraph(g, verts)
        if sub.num_edges == 0:
            continue
        if euler_lower_bound(sub) > 0:
            return None
        rho = embedding_at_genus(sub, 0, budget)
        if rho is None:
            return None
        for i, v in enumerate(verts):
            order[v] = tuple(verts[w] for w in rho.order[i])
    return RotationSystem(tuple(order))


def kuratowski_witness(g: Graph, budget: int = DEFAULT_SUBDIVISION_BUDGET) -> Optional[SubdivisionWitness]:
    """Search for a subdivision of K5, then K3,3."""
    patterns = KURATOWSKI
    if sum(1 for v in g.vertices() if g.degree(v) >= 4) < 5:
        patterns = KURATOWSKI[1:]
    for name, pattern, genus in patterns:
        res = find_subdivision(g, pattern, budget)
        if res.found:
            return SubdivisionWitness(name, res.mapping, genus, kuratowski=True)
    return None


def is_planar(g: Graph, budget: int = DEFAULT_BUDGET) -> PlanarityResult:
    """Decide planarity; non-planar answers carry a K5 or K3,3 subdivision."""
    try:
        rho = planar_rotation(g, budget)
    except BudgetExhausted:
        raise PlanarityUndecided("planarity search exceeded its budget") from None
    if rho is not None:
        return PlanarityResult(True, rotation=rho)
    witness = kuratowski_witness(g)
    if witness is None:
        raise PlanarityUndecided("non-planar but no Kuratowski subdivision found within budget")
    return PlanarityResult(False, witness=witness)
