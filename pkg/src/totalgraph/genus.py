"""Exact orientable genus by edge-insertion backtracking.

A partial embedding is grown one edge at a time.  Inserting an edge whose two
chosen corners lie on the same face splits that face and keeps the genus;
corners on different faces merge two faces and raise the genus by one.  For a
target genus ``t`` the search never lets the partial genus exceed ``t``; the
target is raised from a lower bound until an embedding is found.

Genus is additive over connected components, so each component is solved on
its own.
"""

from __future__ import annotations

import math
from collections import deque

from .embedding import RotationSystem, euler_genus
from .evidence import ComponentGenus, FormulaChain, GenusEvidence, SearchExhausted
from .graph import Graph, component_vertex_sets, induced_subgraph

DEFAULT_BUDGET = 10**8


class BudgetExhausted(Exception):
    pass


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``inf`` for forests)."""
    best = math.inf
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in g.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def euler_lower_bound(g: Graph) -> int:
    """Lower bound from Euler's formula for a connected graph.

    Every face of a connected simple graph with a cycle has length at least the
    girth, so ``F <= 2E / girth`` and ``2 - 2g = V - E + F``.
    """
    girth_ = girth(g)
    if girth_ == math.inf:
        return 0
    v, e = g.n, g.num_edges
    max_faces = (2 * e) // girth_
    return max(0, math.ceil((2 - v + e - max_faces) / 2))


def twin_classes(g: Graph) -> list[int]:
    """Class id per vertex; vertices in one class are interchangeable by automorphisms.

    Two vertices are twins when they have equal open neighbourhoods or equal
    closed neighbourhoods; any permutation of a twin class is an automorphism.
    """
    cls = list(range(g.n))
    for u in g.vertices():
        for w in range(u):
            if cls[w] != w:
                continue
            if g.adj[u] == g.adj[w] or g.adj[u] | {u} == g.adj[w] | {w}:
                cls[u] = w
                break
    return cls


class _EmbeddingSearch:
    """Backtracking search for an embedding of one connected graph at a fixed target genus."""

    def __init__(self, g: Graph, symmetry: bool = True, lookahead: bool = True):
        self.g = g
        self.symmetry = symmetry
        self.use_lookahead = lookahead
        n = g.n
        self.root = max(g.vertices(), key=lambda v: (g.degree(v), -v))
        self.cls = twin_classes(g)
        self.order = self._vertex_order()
        self.parent = {}
        placed = {self.root}
        ops = []  # ("tree", parent, w) | ("back", x, w)
        for w in self.order[1:]:
            back = [x for x in self.order if x in placed and x in g.adj[w]]
            # the tree edge attaches to the earliest placed neighbour
            p = back[0]
            self.parent[w] = p
            ops.append(("tree", p, w))
            ops.extend(("back", x, w) for x in back[1:])
            placed.add(w)
        self.ops = ops
        self.root_nbrs = sorted(g.adj[self.root], key=lambda v: (self.cls[v], v))
        self.succ: list[dict[int, int]] = [dict() for _ in range(n)]
        self.pred: list[dict[int, int]] = [dict() for _ in range(n)]
        self.nodes = 0

    def _vertex_order(self) -> list[int]:
        """Root first, then its neighbours (by twin class), then maximum-cardinality order."""
        g = self.g
        root = self.root
        order = [root] + sorted(g.adj[root], key=lambda v: (self.cls[v], v))
        placed = set(order)
        weight = [0] * g.n
        for v in order:
            for w in g.adj[v]:
                weight[w] += 1
        while len(order) < g.n:
            w = max((v for v in g.vertices() if v not in placed and weight[v] > 0), key=lambda v: (weight[v], -v))
            order.append(w)
            placed.add(w)
            for x in g.adj[w]:
                weight[x] += 1
        return order

    # -- rotation bookkeeping -------------------------------------------------

    def _insert(self, v: int, w: int, after: int | None) -> None:
        s, p = self.succ[v], self.pred[v]
        if after is None:
            s[w] = w
            p[w] = w
            return
        nxt = s[after]
        s[after] = w
        s[w] = nxt
        p[nxt] = w
        p[w] = after

    def _remove(self, v: int, w: int) -> None:
        s, p = self.succ[v], self.pred[v]
        a, b = p[w], s[w]
        del s[w], p[w]
        if a != w:
            s[a] = b
            p[b] = a

    def _corner_faces(self, targets: tuple[int, ...]) -> dict[tuple[int, int], int]:
        """Face id for every corner ``(v, a)`` (between ``a`` and ``succ_v(a)``) at the target vertices."""
        succ = self.succ
        label: dict[tuple[int, int], int] = {}
        fid = 0
        for v in targets:
            for a in succ[v]:
                if (v, a) in label:
                    continue
                # the corner (v, a) lies on the face of the dart a -> v
                x, y = a, v
                while True:
                    if y in targets:
                        label[(y, x)] = fid
                    nx = succ[y][x]
                    x, y = y, nx
                    if x == a and y == v:
                        break
                fid += 1
        return label

    def _root_ok(self, w: int) -> bool:
        """Twin-class order at the root when reading its rotation from the first neighbour."""
        first = self.root_nbrs[0]
        reading = [first]
        s = self.succ[self.root]
        x = s[first]
        while x != first:
            reading.append(x)
            x = s[x]
        cw = self.cls[w]
        same = [x for x in reading if self.cls[x] == cw]
        if same[-1] != w:
            return False
        if len(reading) == len(self.root_nbrs):
            seq = [self.cls[x] for x in reading]
            k = len(seq)
            c0 = self.cls[first]
            for i in range(k):
                if seq[i] != c0:
                    continue
                fwd = [seq[(i + j) % k] for j in range(k)]
                bwd = [seq[(i - j) % k] for j in range(k)]
                if fwd < seq or bwd < seq:
                    return False
        return True

    # -- search ------------------------------------------------------------------

    def run(self, target: int, budget: int) -> RotationSystem | None:
        """Search at genus ``target``; ``budget`` caps the cumulative node count."""
        self.budget = budget
        self.target = target
        n = self.g.n
        self.succ = [dict() for _ in range(n)]
        self.pred = [dict() for _ in range(n)]
        if self._step(0, 0):
            order = []
            for v in range(n):
                s = self.succ[v]
                if not s:
                    order.append(())
                    continue
                start = min(s)
                rot = [start]
                x = s[start]
                while x != start:
                    rot.append(x)
                    x = s[x]
                order.append(tuple(rot))
            return RotationSystem(tuple(order))
        return None

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted

    def _step(self, i: int, genus: int) -> bool:
        if i == len(self.ops):
            return True
        kind, x, w = self.ops[i]
        if kind == "tree":
            return self._tree_step(i, genus, x, w)
        return self._back_step(i, genus, x, w)

    def _tree_step(self, i, genus, p, w) -> bool:
        succ = self.succ
        if not succ[p]:
            corners = [None]
        else:
            start = min(succ[p])
            corners = [start]
            c = succ[p][start]
            while c != start:
                corners.append(c)
                c = succ[p][c]
        for a in corners:
            self._tick()
            self._insert(p, w, a)
            self._insert(w, p, None)
            if (
                (p != self.root or not self.symmetry or self._root_ok(w))
                and (genus < self.target or self._lookahead(i + 1))
                and self._step(i + 1, genus)
            ):
                return True
            self._remove(w, p)
            self._remove(p, w)
        return False

    def _back_step(self, i, genus, u, v) -> bool:
        labels = self._corner_faces((u, v))
        cu = sorted((a for a in self.succ[u]), key=lambda a: (labels[(u, a)], a))
        cv = sorted((b for b in self.succ[v]), key=lambda b: (labels[(v, b)], b))
        splits = [(a, b) for a in cu for b in cv if labels[(u, a)] == labels[(v, b)]]
        moves = [(a, b, 0) for a, b in splits]
        if genus < self.target:
            moves.extend((a, b, 1) for a in cu for b in cv if labels[(u, a)] != labels[(v, b)])
        elif not splits:
            return False
        for a, b, inc in moves:
            self._tick()
            self._insert(u, v, a)
            self._insert(v, u, b)
            if (genus + inc < self.target or self._lookahead(i + 1)) and self._step(i + 1, genus + inc):
                return True
            self._remove(v, u)
            self._remove(u, v)
        return False

    def _lookahead(self, i: int) -> bool:
        """With no genus to spare, every pending back edge of the current vertex needs a shared face."""
        if not self.use_lookahead or i >= len(self.ops) or self.ops[i][0] != "back":
            return True
        w = self.ops[i][2]
        pending = []
        while i < len(self.ops) and self.ops[i][0] == "back" and self.ops[i][2] == w:
            pending.append(self.ops[i][1])
            i += 1
        labels = self._corner_faces(tuple([w] + pending))
        faces_w = {labels[(w, a)] for a in self.succ[w]}
        for x in pending:
            if not any(labels[(x, b)] in faces_w for b in self.succ[x]):
                return False
        return True


def embedding_at_genus(g: Graph, target: int, budget: int = DEFAULT_BUDGET) -> RotationSystem | None:
    """A rotation system of genus at most ``target`` for a connected graph, or ``None``.

    Raises :class:`BudgetExhausted` when the search runs out of nodes.
    """
    if g.num_edges == 0:
        return RotationSystem(((),) * g.n)
    return _EmbeddingSearch(g).run(target, budget)


def component_genus(g: Graph, budget: int = DEFAULT_BUDGET, start: int | None = None, **search_options):
    """Genus of a connected graph.

    Returns ``(lower, rotation_or_None, nodes, witnesses)``; ``rotation`` is set
    exactly when the genus was determined, in which case ``lower`` is the genus.
    """
    e, v = g.num_edges, g.n
    if e == 0:
        return 0, RotationSystem(((),) * v), 0, []
    euler = euler_lower_bound(g)
    witnesses = []
    if euler > 0:
        witnesses.append(
            FormulaChain((f"Euler: V={v}, E={e}, girth={girth(g)} gives genus >= {euler}",), euler)
        )
    lower = max(euler, start or 0)
    search = _EmbeddingSearch(g, **search_options)
    t = lower
    while True:
        try:
            rho = search.run(t, budget)
        except BudgetExhausted:
            return t, None, search.nodes, witnesses
        if rho is not None:
            assert euler_genus(g, rho) == t
            return t, rho, search.nodes, witnesses
        if t + 1 > lower:
            witnesses = [w for w in witnesses if w.bound > t] + [SearchExhausted(t + 1, search.nodes)]
        t += 1


def exact_genus(g: Graph, budget: int = DEFAULT_BUDGET, **search_options) -> GenusEvidence:
    """Genus of ``g`` as the sum over connected components.

    ``budget`` caps the total number of search nodes; when it runs out the
    verdict is ``timed_out`` with the lower bound proven so far.
    """
    order: list[list[int]] = [[] for _ in range(g.n)]
    comps = []
    lower_total = 0
    nodes = 0
    witnesses = []
    complete = True
    for verts in component_vertex_sets(g):
        sub = induced_subgraph(g, verts)
        low, rho, used, wit = component_genus(sub, max(budget - nodes, 0), **search_options)
        nodes += used
        lower_total += low
        comps.append(ComponentGenus(tuple(verts), low, low if rho is not None else None, used))
        witnesses.extend(wit)
        if rho is None:
            complete = False
            continue
        for i, v in enumerate(verts):
            order[v] = [verts[w] for w in rho.order[i]]
    if len(comps) > 1 and witnesses:
        witnesses = [
            FormulaChain(
                tuple(f"component {i}: genus >= {c.lower}" for i, c in enumerate(comps))
                + (f"additivity over components: genus >= {lower_total}",),
                lower_total,
                trusted=False,
            )
        ]
    if complete:
        return GenusEvidence(
            "exact", lower_total, lower_total, RotationSystem.from_lists(order), witnesses, comps, nodes
        )
    return GenusEvidence("timed_out", lower_total, None, None, witnesses, comps, nodes)
