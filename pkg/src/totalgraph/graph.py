"""Simple undirected graphs, the total graph of a ring, and graph I/O."""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

from .ring import FiniteRing


class GraphError(ValueError):
    pass


class EmptySubset(GraphError):
    pass


class Graph:
    """An immutable simple graph on vertices ``0 .. n-1`` with string labels."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        self.n = n
        adj = [set() for _ in range(n)]
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError("label count does not match vertex count")
        self.labels: tuple[str, ...] = tuple(labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def neighbors_sorted(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(a)) for a in self.adj)

    def index(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def total_graph(ring: FiniteRing) -> Graph:
    """Vertices are ring elements; distinct ``x, y`` are adjacent iff ``x + y`` is a zero-divisor."""
    z = ring.zero_divisor_members
    add = ring.add_table
    edges = [(x, y) for x in ring.elements for y in range(x + 1, ring.order) if add[x][y] in z]
    return Graph(ring.order, edges, ring.names)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite([m, n])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(p < 1 for p in parts):
        raise GraphError("part sizes must be positive")
    part_of = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(part_of)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if part_of[u] != part_of[v]]
    return Graph(n, edges)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """``(x, y) ~ (x', y')`` iff one coordinate agrees and the other is an edge."""
    n2 = g2.n
    edges = []
    for x in g1.vertices():
        for a, b in g2.edges:
            edges.append((x * n2 + a, x * n2 + b))
    for a, b in g1.edges:
        for y in g2.vertices():
            edges.append((a * n2 + y, b * n2 + y))
    labels = [f"({p},{q})" for p in g1.labels for q in g2.labels]
    return Graph(g1.n * n2, edges, labels)


def graph_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices are renumbered consecutively."""
    edges, labels, off = [], [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        labels.extend(g.labels)
        off += g.n
    if len(set(labels)) != len(labels):
        labels = [str(i) for i in range(off)]
    return Graph(off, edges, labels)


def disjoint_union(k: int, g: Graph) -> Graph:
    """``k`` disjoint copies of ``g``."""
    return graph_union(*([g] * k)) if k > 0 else Graph(0)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> Graph:
    verts = sorted(set(subset))
    if not verts:
        raise EmptySubset("induced subgraph of the empty set")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(verts), edges, [g.labels[v] for v in verts])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]`` (labels follow)."""
    labels = [""] * g.n
    for v in g.vertices():
        labels[perm[v]] = g.labels[v]
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges], labels)


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in g.vertices()), reverse=True)


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in g.vertices())


def component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, c) for c in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_vertex_sets(g)) == 1


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    """Edge-list text: ``u v`` per line; vertex count and labels ride in comments."""
    lines = [f"# vertices {g.n}"]
    if g.labels != tuple(str(i) for i in range(g.n)):
        lines.extend(f"# label {v} {g.labels[v]}" for v in g.vertices())
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    labels: dict[int, str] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if len(parts) == 2 and parts[0] == "vertices" and parts[1].isdigit():
                n = int(parts[1])
            elif len(parts) == 3 and parts[0] == "label" and parts[1].isdigit():
                labels[int(parts[1])] = parts[2]
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v' with non-negative integers, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = max(top, max(labels, default=-1) + 1)
    elif top > n:
        raise GraphError(f"edge endpoint {top - 1} exceeds declared vertex count {n}")
    names = [labels.get(i, str(i)) for i in range(n)]
    return Graph(n, edges, names)


def to_dot(g: Graph, name: str = "G") -> str:
    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {q(name)} {{"]
    lines.extend(f"  {v} [label={q(g.labels[v])}];" for v in g.vertices())
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
