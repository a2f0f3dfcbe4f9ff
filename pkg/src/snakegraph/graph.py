"""Immutable simple undirected graphs over dense integer vertex ids.

Vertices are always 0..n-1. Adjacency is kept both as sorted tuples (for
deterministic iteration) and as bitmasks (for the search and solver hot
paths). Graphs built from integer grid coordinates remember them, and their
edge set is exactly the unit-distance pairs of the coordinate set.

All structural algorithms here are exact. Exhaustive searches carry explicit
size guards; exceeding a guard raises SearchCeilingExceeded rather than
returning an approximation.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


class SearchCeilingExceeded(RuntimeError):
    """An exhaustive search was refused because it exceeds its size guard."""


Coord = tuple[int, int]


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable after construction and safe to share across
    threads. ``coords`` is present iff the graph was built or loaded as a
    grid graph, in which case uv is an edge iff the coordinates are at
    Euclidean distance exactly 1.
    """

    __slots__ = ("n", "adj", "adj_bits", "coords", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 coords: Optional[Sequence[Coord]] = None):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        if coords is not None:
            coords = tuple((int(x), int(y)) for x, y in coords)
            if len(coords) != n:
                raise GraphError("coords length must equal vertex count")
            if len(set(coords)) != n:
                raise GraphError("duplicate grid coordinates")
            expected = _unit_distance_edges(coords)
            actual = {(min(u, v), max(u, v))
                      for u in range(n) for v in neighbor_sets[u] if u < v}
            if actual != expected:
                raise GraphError(
                    "grid graph edges must be exactly the unit-distance pairs")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj",
                           tuple(tuple(sorted(s)) for s in neighbor_sets))
        object.__setattr__(self, "adj_bits",
                           tuple(sum(1 << v for v in s) for s in neighbor_sets))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_edges", tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v))
        object.__setattr__(self, "_hash", hash((n, self._edges, coords)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self._edges == other._edges and self.coords == other.coords)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        grid = ", grid" if self.coords is not None else ""
        return f"Graph(n={self.n}, m={self.edge_count}{grid})"


def _unit_distance_edges(coords: Sequence[Coord]) -> set[tuple[int, int]]:
    index = {c: i for i, c in enumerate(coords)}
    out: set[tuple[int, int]] = set()
    for (x, y), i in index.items():
        for nb in ((x + 1, y), (x, y + 1)):
            j = index.get(nb)
            if j is not None:
                out.add((min(i, j), max(i, j)))
    return out


# ---------------------------------------------------------------------------
# Constructors

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def build_theta(p: int, q: int, r: int) -> Graph:
    """Two junction vertices joined by three internally disjoint paths of
    lengths p, q, r.

    Degenerate parameters are rejected: a zero length would merge the
    junctions, and two length-1 paths would create a parallel edge. Junctions
    are vertices 0 and 1; internal path vertices are numbered consecutively,
    first path first.
    """
    lengths = (p, q, r)
    if any(x < 1 for x in lengths):
        raise GraphError(
            f"theta path lengths must all be >= 1, got {lengths}: "
            "a zero length would merge the two junction vertices")
    if sum(1 for x in lengths if x == 1) > 1:
        raise GraphError(
            f"at most one theta path may have length 1, got {lengths}: "
            "two direct junction edges would be parallel")
    u, v = 0, 1
    edges: list[tuple[int, int]] = []
    nxt = 2
    for length in lengths:
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, edges)


def rectangular_grid(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("grid dimensions must be positive")
    coords = [(x, y) for y in range(n) for x in range(m)]
    return grid_from_coords(coords)


def grid_from_coords(coords: Iterable[Coord]) -> Graph:
    """Grid graph induced by a set of integer coordinates.

    The vertex order is the sorted coordinate order, so equal coordinate sets
    always produce identical graphs.
    """
    cs = sorted((int(x), int(y)) for x, y in coords)
    if len(set(cs)) != len(cs):
        raise GraphError("duplicate grid coordinates")
    return Graph(len(cs), _unit_distance_edges(cs), coords=cs)


# ---------------------------------------------------------------------------
# Basic structure

def connected_components(g: Graph, skip: int = -1) -> list[list[int]]:
    """Components of g, optionally ignoring one vertex entirely."""
    seen = [False] * g.n
    if 0 <= skip < g.n:
        seen[skip] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bfs_distances(g: Graph, src: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def cut_vertices(g: Graph) -> list[int]:
    """All articulation vertices, ascending. Expects g connected."""
    base = len(connected_components(g))
    out = []
    for v in range(g.n):
        if g.n > 1 and len(connected_components(g, skip=v)) > base:
            out.append(v)
    return out


def components_after_removal(g: Graph, v: int) -> list[list[int]]:
    return connected_components(g, skip=v)


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A valid 2-coloring (X, Y) with min(X∪Y) in X, or None if not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    x = frozenset(v for v in range(g.n) if color[v] == 0)
    y = frozenset(v for v in range(g.n) if color[v] == 1)
    return (x, y) if 0 in x or not x else (y, x)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the sorted original ids of its vertices.

    Coordinates are carried over when g is a grid graph, so induced subgraphs
    of grid graphs stay grid graphs.
    """
    verts = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges
             if u in index and v in index]
    coords = tuple(g.coords[v] for v in verts) if g.coords is not None else None
    return Graph(len(verts), edges, coords=coords), verts


# ---------------------------------------------------------------------------
# Cycle structure

def shortest_cycle(g: Graph) -> Optional[list[int]]:
    """A shortest cycle as a vertex list, or None for forests.

    For every edge uv: a shortest u-v path avoiding that edge plus uv itself
    is a shortest cycle through uv, so minimizing over edges is exact.
    """
    best: Optional[list[int]] = None
    for u, v in g.edges:
        # BFS from u to v with edge uv removed.
        parent = {u: -1}
        queue = deque([u])
        found = False
        while queue and not found:
            a = queue.popleft()
            for b in g.adj[a]:
                if (a, b) == (u, v) or (a, b) == (v, u):
                    continue
                if b not in parent:
                    parent[b] = a
                    if b == v:
                        found = True
                        break
                    queue.append(b)
        if not found:
            continue
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        if best is None or len(path) < len(best):
            best = path
    return best


def girth(g: Graph) -> float:
    """Length of the shortest cycle; math.inf for forests."""
    cyc = shortest_cycle(g)
    return math.inf if cyc is None else len(cyc)


CIRCUMFERENCE_LIMIT = 14


def circumference(g: Graph, limit: int = CIRCUMFERENCE_LIMIT) -> int:
    """Length of the longest simple cycle, 0 if acyclic. Exhaustive.

    Uses a subset DP per anchor vertex (the cycle minimum), so the guard is
    on the vertex count.
    """
    if g.n > limit:
        raise SearchCeilingExceeded(
            f"circumference search limited to {limit} vertices, got {g.n}")
    best = 0
    for a in range(g.n):
        # Paths from a through vertices > a; state: mask of path vertices
        # beyond a -> bitmask of possible endpoints.
        above = [v for v in g.adj[a] if v > a]
        layer: dict[int, int] = {}
        for v in above:
            layer[1 << v] = layer.get(1 << v, 0) | (1 << v)
        a_bit_nbrs = g.adj_bits[a]
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                size = bin(mask).count("1")
                e = ends
                while e:
                    end_bit = e & -e
                    e ^= end_bit
                    end = end_bit.bit_length() - 1
                    if size >= 2 and a_bit_nbrs >> end & 1:
                        best = max(best, size + 1)
                    free = g.adj_bits[end] & ~mask
                    while free:
                        wb = free & -free
                        free ^= wb
                        w = wb.bit_length() - 1
                        if w <= a:
                            continue
                        nm = mask | wb
                        nxt[nm] = nxt.get(nm, 0) | wb
            layer = nxt
    return best
