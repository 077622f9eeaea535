"""Graph isomorphism by colour refinement plus individualization backtracking."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

ISO_SIZE_CAP = 64


class SizeCapExceeded(GraphError):
    pass


@dataclass(frozen=True)
class IsoCertificate:
    """``mapping[v]`` is the vertex of the second graph matched with ``v``."""

    mapping: tuple[int, ...]

    def verify(self, g1: Graph, g2: Graph) -> bool:
        m = self.mapping
        if g1.n != g2.n or len(m) != g1.n or sorted(m) != list(range(g2.n)):
            return False
        if g1.num_edges != g2.num_edges:
            return False
        return all(g2.has_edge(m[u], m[v]) for u, v in g1.edges)

    def inverse(self) -> "IsoCertificate":
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return IsoCertificate(tuple(inv))

    def as_labels(self, g1: Graph, g2: Graph) -> dict[str, str]:
        return {g1.labels[v]: g2.labels[w] for v, w in enumerate(self.mapping)}


def _refine(g1: Graph, g2: Graph, c1: list[int], c2: list[int]):
    """Jointly refine two colourings to equitability; ``None`` if they diverge."""
    while True:
        sig1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in g1.vertices()]
        sig2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in g2.vertices()]
        if sorted(sig1) != sorted(sig2):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(sig1)))}
        n1 = [ids[s] for s in sig1]
        n2 = [ids[s] for s in sig2]
        if len(ids) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def _search(g1: Graph, g2: Graph, c1: list[int], c2: list[int]):
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(c1):
        cells.setdefault(c, []).append(v)
    open_cells = [c for c, vs in cells.items() if len(vs) > 1]
    if not open_cells:
        mapping = [0] * g1.n
        where = {c: w for w, c in enumerate(c2)}
        for v, c in enumerate(c1):
            mapping[v] = where[c]
        cert = IsoCertificate(tuple(mapping))
        return cert if cert.verify(g1, g2) else None
    target = min(open_cells, key=lambda c: (len(cells[c]), c))
    v = cells[target][0]
    fresh = max(c1) + 1
    for w in (u for u in g2.vertices() if c2[u] == target):
        d1, d2 = list(c1), list(c2)
        d1[v] = fresh
        d2[w] = fresh
        refined = _refine(g1, g2, d1, d2)
        if refined is None:
            continue
        found = _search(g1, g2, *refined)
        if found is not None:
            return found
    return None


def is_isomorphic(g1: Graph, g2: Graph, cap: int = ISO_SIZE_CAP) -> IsoCertificate | None:
    """Return a certificate mapping ``g1`` onto ``g2``, or ``None`` if non-isomorphic."""
    if max(g1.n, g2.n) > cap:
        raise SizeCapExceeded(f"isomorphism test limited to {cap} vertices")
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if g1.n == 0:
        return IsoCertificate(())
    refined = _refine(g1, g2, [0] * g1.n, [0] * g2.n)
    if refined is None:
        return None
    return _search(g1, g2, *refined)
