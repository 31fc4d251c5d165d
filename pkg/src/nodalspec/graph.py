"""Simple undirected graphs and the structural quantities used throughout.

A :class:`Graph` is an immutable value: a vertex count and a sorted tuple of
edges ``(u, v)`` with ``u < v``.  Everything here is a pure function.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParams, Disconnected, DuplicateEdge, NoSuchEdge, OutOfRange, SelfLoop

INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(x)) for x in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self._adj]

    @property
    def m(self) -> int:
        return len(self.edges)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return 0 <= u < self.n and v in self._adj[u]

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def bitrows(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def edge_list(self) -> list[list[int]]:
        return [[u, v] for u, v in self.edges]


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalise an edge list.

    >>> build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).edges
    ((0, 1), (0, 3), (1, 2), (2, 3))
    """
    if n < 0:
        raise BadParams(f"vertex count must be non-negative, got {n}")
    seen = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    out = []
    for v in vertices:
        v = int(v)
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} not in [0, {g.n})")
        out.append(v)
    return out


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[float]:
    """Multi-source BFS distances; unreachable vertices get ``INFINITE``."""
    dist = [INFINITE] * g.n
    queue = deque()
    for s in _check_vertices(g, sources):
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == INFINITE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def cyclomatic(g: Graph) -> int:
    """``|E| - |V| + c`` (c = number of components)."""
    return g.m - g.n + len(components(g))


def ball(g: Graph, seed: Iterable[int], k: int) -> frozenset[int]:
    """Vertices within distance ``k`` of the seed set."""
    if k < 0:
        raise BadParams("radius must be non-negative")
    dist = bfs_distances(g, seed)
    return frozenset(v for v, d in enumerate(dist) if d <= k)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G[keep]`` relabelled densely; the tuple maps new labels to old ones."""
    old = tuple(sorted(set(_check_vertices(g, keep))))
    new = {v: i for i, v in enumerate(old)}
    edges = tuple((new[u], new[v]) for u, v in g.edges if u in new and v in new)
    return Graph(len(old), edges), old


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])[0]


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = sorted((int(e[0]), int(e[1])))
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"({u}, {v}) is not an edge")
    return Graph(g.n, tuple(x for x in g.edges if x != (u, v)))


def disjoint_copies(g: Graph, t: int) -> Graph:
    """``t`` disjoint copies; copy ``c`` uses labels ``c*n .. c*n + n - 1``."""
    if t < 1:
        raise BadParams(f"need at least one copy, got {t}")
    n = g.n
    edges = tuple((u + c * n, v + c * n) for c in range(t) for u, v in g.edges)
    return Graph(n * t, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = tuple((u + a.n, v + a.n) for u, v in b.edges)
    return Graph(a.n + b.n, a.edges + shifted)


def subdivide_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Replace edge ``{x, y}`` by the path ``x - n - y`` through new vertex ``n``."""
    x, y = sorted((int(e[0]), int(e[1])))
    if not g.has_edge(x, y):
        raise NoSuchEdge(f"({x}, {y}) is not an edge")
    n = g.n
    edges = [uv for uv in g.edges if uv != (x, y)] + [(x, n), (y, n)]
    return Graph(n + 1, tuple(sorted(edges)))


# -- spanning trees -----------------------------------------------------------

@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def level_order(self) -> list[int]:
        """Vertices by (depth, label)."""
        return sorted(range(self.n), key=lambda v: (self.depth[v], v))

    def as_graph(self) -> Graph:
        return Graph(self.n, tuple(sorted(
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if v != p)))

    def eccentricity(self) -> int:
        return max(self.depth, default=0)


def bfs_tree(g: Graph, root: int) -> SpanningTree:
    """BFS spanning tree, exploring neighbours in ascending label order."""
    _check_vertices(g, [root])
    parent = [-1] * g.n
    depth = [-1] * g.n
    parent[root] = root
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    if min(depth) < 0:
        raise Disconnected("graph is not connected; no spanning tree")
    return SpanningTree(root, tuple(parent), tuple(depth))


def bfs_order(g: Graph, root: int) -> list[int]:
    seen = [False] * g.n
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


# -- statistics ---------------------------------------------------------------

@dataclass(frozen=True)
class StructureStats:
    max_degree: int
    cyclomatic: int
    girth: float  # int, or INFINITE for forests
    diameter: float  # int, or INFINITE when disconnected


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest cycle as a vertex sequence, or None for a forest.

    BFS runs from every vertex in ascending order and keeps, per root, the
    first non-tree edge closing a walk of minimal length.  Ties go to the
    smaller root, so the result is deterministic.  At the global minimum the
    closed walk through the root is a simple cycle.
    """
    best = None
    for r in range(g.n):
        limit = len(best) if best is not None else INFINITE
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        found = None
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= limit:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < limit:
                        limit = length
                        found = (u, w)
        if found is None:
            continue
        u, w = found
        left = [u]
        while left[-1] != r:
            left.append(parent[left[-1]])
        right = [w]
        while right[-1] != r:
            right.append(parent[right[-1]])
        cycle = list(reversed(left)) + right[:-1]
        if len(set(cycle)) == len(cycle):
            best = tuple(cycle)
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle via BFS from each vertex; INFINITE for forests."""
    best = INFINITE
    for r in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(g: Graph) -> float:
    if g.n == 0:
        return 0
    best = 0
    for r in range(g.n):
        d = max(bfs_distances(g, [r]))
        if d == INFINITE:
            return INFINITE
        best = max(best, d)
    return best


def structure_stats(g: Graph) -> StructureStats:
    return StructureStats(g.max_degree(), cyclomatic(g), girth(g), diameter(g))


def end_path_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges lying on some end path.

    Walk inward from every degree-1 vertex while the interior vertices have
    degree 2; every edge traversed belongs to an end path.
    """
    out = set()
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        prev, cur = leaf, g.neighbors(leaf)[0]
        out.add((min(prev, cur), max(prev, cur)))
        while g.degree(cur) == 2:
            a, b = g.neighbors(cur)
            nxt = b if a == prev else a
            out.add((min(cur, nxt), max(cur, nxt)))
            prev, cur = cur, nxt
    return frozenset(out)


# -- random graphs ------------------------------------------------------------

def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) using numpy's PCG64 ``default_rng(seed)``.

    Pairs are visited in lexicographic order and kept when a uniform draw in
    [0, 1) falls below ``p``.
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise BadParams(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, tuple(zip(iu[keep].tolist(), ju[keep].tolist())))


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Uniform random labelled tree (Prüfer code) plus ``extra_edges`` random chords."""
    if n < 1 or extra_edges < 0:
        raise BadParams("need n >= 1 and extra_edges >= 0")
    rng = np.random.default_rng(seed)
    edges = set()
    if n == 2:
        edges.add((0, 1))
    elif n > 2:
        code = rng.integers(0, n, size=n - 2).tolist()
        degree = [1] * n
        for x in code:
            degree[x] += 1
        for x in code:
            leaf = next(v for v in range(n) if degree[v] == 1)
            edges.add((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [w for w in range(n) if degree[w] == 1]
        edges.add((u, v))
    room = n * (n - 1) // 2 - len(edges)
    for _ in range(min(extra_edges, room)):
        while True:
            u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
            if (u, v) not in edges:
                edges.add((u, v))
                break
    return Graph(n, tuple(sorted(edges)))
