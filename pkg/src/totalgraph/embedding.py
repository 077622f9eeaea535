"""Rotation systems (combinatorial embeddings) and face tracing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, GraphError, component_vertex_sets, induced_subgraph, is_connected


class MalformedRotation(GraphError):
    pass


class DisconnectedInput(GraphError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    """``order[v]`` lists the neighbours of ``v`` in clockwise cyclic order."""

    order: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, order: Sequence[Sequence[int]]) -> "RotationSystem":
        return cls(tuple(tuple(o) for o in order))

    def successor(self) -> list[dict[int, int]]:
        succ = []
        for rot in self.order:
            k = len(rot)
            succ.append({rot[i]: rot[(i + 1) % k] for i in range(k)})
        return succ

    def check(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise MalformedRotation(f"rotation covers {len(self.order)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.order):
            if len(rot) != len(set(rot)) or set(rot) != g.adj[v]:
                raise MalformedRotation(f"rotation at vertex {g.labels[v]} is not a permutation of its neighbours")

    def restrict(self, vertices: Sequence[int]) -> "RotationSystem":
        """The rotation of an induced component, renumbered as ``induced_subgraph`` does."""
        pos = {v: i for i, v in enumerate(sorted(vertices))}
        return RotationSystem(tuple(tuple(pos[w] for w in self.order[v]) for v in sorted(vertices)))


def trace_faces(g: Graph, rho: RotationSystem) -> list[list[tuple[int, int]]]:
    """Partition the ``2E`` darts into face walks.

    Arriving at ``v`` along ``(u, v)``, the walk leaves along ``(v, succ_v(u))``.
    """
    succ = rho.successor()
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in g.edges:
        for dart in ((u, v), (v, u)):
            if dart in seen:
                continue
            face = []
            d = dart
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                d = (b, succ[b][a])
            faces.append(face)
    return faces


def euler_genus(g: Graph, rho: RotationSystem) -> int:
    """Genus of the orientable embedding of a connected graph given by ``rho``."""
    if g.num_edges == 0:
        return 0
    f = len(trace_faces(g, rho))
    twice = 2 - g.n + g.num_edges - f
    if twice % 2 or twice < 0:  # pragma: no cover - impossible for well-formed input
        raise MalformedRotation("face count violates Euler's formula")
    return twice // 2


def verify_embedding(g: Graph, rho: RotationSystem) -> int:
    """Check ``rho`` against ``g`` and return the genus of the embedding.

    Raises :class:`MalformedRotation` or, for a graph with more than one
    component, :class:`DisconnectedInput` (use :func:`verify_embedding_components`).
    """
    rho.check(g)
    if not is_connected(g):
        raise DisconnectedInput("graph is disconnected; genus is verified per component")
    return euler_genus(g, rho)


def verify_embedding_components(g: Graph, rho: RotationSystem) -> int:
    """Sum of per-component genera of the embedding ``rho`` of a possibly disconnected graph."""
    rho.check(g)
    total = 0
    for comp in component_vertex_sets(g):
        total += euler_genus(induced_subgraph(g, comp), rho.restrict(comp))
    return total


def random_rotation(g: Graph, rng: random.Random) -> RotationSystem:
    order = []
    for v in g.vertices():
        nb = sorted(g.adj[v])
        rng.shuffle(nb)
        order.append(tuple(nb))
    return RotationSystem(tuple(order))


# ---------------------------------------------------------------------------
# Text format: one line per vertex, ``v: w1 w2 ... wk``
# ---------------------------------------------------------------------------


def _use_labels(g: Graph) -> bool:
    return len(set(g.labels)) == g.n and all(lab and not any(c.isspace() or c == ":" for c in lab) for lab in g.labels)


def format_rotation(g: Graph, rho: RotationSystem) -> str:
    name = (lambda v: g.labels[v]) if _use_labels(g) else str
    lines = [f"{name(v)}: " + " ".join(name(w) for w in rho.order[v]) for v in g.vertices()]
    return "\n".join(lines) + "\n"


def parse_rotation(text: str, g: Graph, aliases: Mapping[str, str] | None = None) -> RotationSystem:
    """Read a rotation for ``g``; tokens are vertex labels (or indices when labels are ambiguous).

    ``aliases`` optionally maps alternative spellings to graph labels.
    """
    use_labels = _use_labels(g)

    def vertex(tok: str, lineno: int) -> int:
        tok = aliases.get(tok, tok) if aliases else tok
        try:
            return g.index(tok) if use_labels else int(tok)
        except (KeyError, ValueError):
            raise MalformedRotation(f"line {lineno}: unknown vertex {tok!r}") from None

    order: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise MalformedRotation(f"line {lineno}: expected 'v: w1 w2 ...'")
        head, rest = line.split(":", 1)
        v = vertex(head.strip(), lineno)
        if v in order:
            raise MalformedRotation(f"line {lineno}: vertex {head.strip()} listed twice")
        order[v] = tuple(vertex(t, lineno) for t in rest.split())
    rho = RotationSystem(tuple(order.get(v, ()) for v in g.vertices()))
    rho.check(g)
    return rho
