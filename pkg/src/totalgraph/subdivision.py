"""Topological subgraph search: find a subdivision of a pattern inside a host."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .evidence import SubdivisionMapping
from .genus import twin_classes
from .graph import Graph

DEFAULT_SUBDIVISION_BUDGET = 2_000_000


@dataclass(frozen=True)
class SubdivisionResult:
    """Outcome of :func:`find_subdivision`.

    ``mapping`` is ``None`` when nothing was found; ``complete`` then tells
    whether absence is proven (search finished) or merely unknown (budget hit).
    """

    mapping: Optional[SubdivisionMapping]
    complete: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.mapping is not None

    @property
    def proven_absent(self) -> bool:
        return self.mapping is None and self.complete


def subdivision_problems(host: Graph, pattern: Graph, mapping: SubdivisionMapping) -> list[str]:
    """All violated conditions of a claimed subdivision (empty list means valid)."""
    problems = []
    branch = mapping.branch
    if len(branch) != pattern.n:
        return [f"{len(branch)} branch vertices for a pattern with {pattern.n}"]
    if len(set(branch)) != len(branch):
        problems.append("branch vertices are not distinct")
    if any(not 0 <= b < host.n for b in branch):
        return problems + ["branch vertex outside the host"]
    paths = mapping.path_map()
    wanted = {(a, b) if a < b else (b, a) for a, b in pattern.edges}
    if set(paths) != wanted:
        problems.append("paths do not correspond one-to-one with pattern edges")
    branch_set = set(branch)
    used_internal: dict[int, tuple[int, int]] = {}
    for (a, b), path in sorted(paths.items()):
        if len(path) < 2 or path[0] != branch[a] or path[-1] != branch[b]:
            problems.append(f"path for pattern edge {a}-{b} has wrong endpoints")
            continue
        if len(set(path)) != len(path):
            problems.append(f"path for pattern edge {a}-{b} repeats a vertex")
        for x, y in zip(path, path[1:]):
            if not host.has_edge(x, y):
                problems.append(f"path for pattern edge {a}-{b} uses non-edge {x}-{y}")
        for x in path[1:-1]:
            if x in branch_set:
                problems.append(f"path for pattern edge {a}-{b} passes through branch vertex {x}")
            elif x in used_internal:
                problems.append(f"paths for {used_internal[x]} and {(a, b)} share vertex {x}")
            else:
                used_internal[x] = (a, b)
    return problems


def is_valid_subdivision(host: Graph, pattern: Graph, mapping: SubdivisionMapping) -> bool:
    return not subdivision_problems(host, pattern, mapping)


class _Budget(Exception):
    pass


class _Finder:
    def __init__(self, host: Graph, pattern: Graph, budget: int):
        self.host = host
        self.pattern = pattern
        self.budget = budget
        self.nodes = 0
        cls = twin_classes(pattern)
        self.pcls = cls
        # most constrained pattern vertices first, keeping twin classes together
        self.porder = sorted(pattern.vertices(), key=lambda v: (-pattern.degree(v), cls[v], v))
        self.cands = {
            v: [h for h in sorted(host.vertices(), key=lambda h: (-host.degree(h), h)) if host.degree(h) >= pattern.degree(v)]
            for v in pattern.vertices()
        }

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget

    def run(self) -> Optional[SubdivisionMapping]:
        self.image: dict[int, int] = {}
        return self._assign(0)

    def _assign(self, k: int):
        if k == len(self.porder):
            return self._route()
        v = self.porder[k]
        used = set(self.image.values())
        # twins of v already placed force increasing images
        floor = max((self.image[u] for u in self.image if self.pcls[u] == self.pcls[v]), default=-1)
        for h in self.cands[v]:
            if h in used or h <= floor:
                continue
            self.tick()
            self.image[v] = h
            found = self._assign(k + 1)
            if found is not None:
                return found
            del self.image[v]
        return None

    def _route(self) -> Optional[SubdivisionMapping]:
        host = self.host
        img = self.image
        branch = set(img.values())
        paths: dict[tuple[int, int], tuple[int, ...]] = {}
        todo = []
        for a, b in self.pattern.edges:
            if host.has_edge(img[a], img[b]):
                paths[(a, b)] = (img[a], img[b])
            else:
                todo.append((a, b))
        free = set(host.vertices()) - branch
        if len(todo) > len(free):
            return None
        found = self._route_rest(todo, paths, free)
        if found is None:
            return None
        return SubdivisionMapping(
            tuple(img[v] for v in self.pattern.vertices()), tuple(sorted(found.items()))
        )

    def _reachable(self, s: int, t: int, free: set[int]) -> Optional[dict[int, int]]:
        """BFS distances to ``t`` over free vertices (``None`` if ``s`` cannot reach it)."""
        dist = {t: 0}
        queue = deque([t])
        adj = self.host.adj
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y == s:
                    dist[s] = dist[x] + 1
                    return dist
                if y in free and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return None

    def _route_rest(self, todo, paths, free):
        if not todo:
            return dict(paths)
        img = self.image
        # pick the pending edge with the fewest options (shortest BFS distance)
        info = []
        for a, b in todo:
            dist = self._reachable(img[a], img[b], free)
            if dist is None:
                return None
            info.append((dist[img[a]], (a, b), dist))
        info.sort(key=lambda t: t[0])
        _, (a, b), dist = info[0]
        rest = [e for e in todo if e != (a, b)]
        s, t = img[a], img[b]
        adj = self.host.adj

        def extend(path, on_path):
            x = path[-1]
            nbrs = sorted(adj[x], key=lambda y: (dist.get(y, 10**9), y))
            for y in nbrs:
                if y == t and len(path) > 1:
                    self.tick()
                    internal = set(path[1:])
                    paths[(a, b)] = tuple(path) + (t,)
                    found = self._route_rest(rest, paths, free - internal)
                    if found is not None:
                        return found
                    del paths[(a, b)]
                elif y in free and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    found = extend(path, on_path)
                    if found is not None:
                        return found
                    path.pop()
                    on_path.discard(y)
            return None

        return extend([s], set())


def find_subdivision(host: Graph, pattern: Graph, budget: int = DEFAULT_SUBDIVISION_BUDGET) -> SubdivisionResult:
    """Search for a subdivision of ``pattern`` in ``host``.

    Branch vertices are chosen among host vertices of sufficient degree (twin
    pattern vertices get increasing images); for each choice, pattern edges
    between adjacent images use that edge and the rest are routed as
    internally disjoint paths by backtracking.  The search is exhaustive unless
    ``budget`` nodes are exceeded.
    """
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return SubdivisionResult(None, True, 0)
    hd = sorted((host.degree(v) for v in host.vertices()), reverse=True)
    pd = sorted((pattern.degree(v) for v in pattern.vertices()), reverse=True)
    if any(h < p for h, p in zip(hd, pd)):
        return SubdivisionResult(None, True, 0)
    finder = _Finder(host, pattern, budget)
    try:
        mapping = finder.run()
    except _Budget:
        return SubdivisionResult(None, False, finder.nodes)
    if mapping is not None:
        assert is_valid_subdivision(host, pattern, mapping)
    return SubdivisionResult(mapping, True, finder.nodes)
