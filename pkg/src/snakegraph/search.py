"""Exhaustive structural searches: Hamiltonian paths and cycles, spanning
theta subgraphs, and small-graph enumeration.

Everything here is exact. The Hamiltonian searches are bitmask backtracking
with a reachability prune; they are meant for small instances and refuse
larger ones via their size guards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, GraphError, SearchCeilingExceeded

HAMILTONIAN_LIMIT = 16
ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class ThetaCertificate:
    """Witness that a theta subgraph with two 2-paths spans the graph.

    ``u`` and ``v`` are the junctions, ``x`` and ``y`` the internal vertices
    of the two 2-paths, and ``long_path`` runs from u to v through every
    remaining vertex.
    """
    u: int
    v: int
    x: int
    y: int
    long_path: tuple[int, ...]

    def cycle_through(self, mid: int) -> list[int]:
        """The (n-1)-cycle made of the long path and the 2-path through mid."""
        if mid not in (self.x, self.y):
            raise ValueError(f"vertex {mid} is not a 2-path middle")
        return list(self.long_path) + [mid]


def _check_guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SearchCeilingExceeded(
            f"{what} search limited to {limit} vertices, got {g.n}")


def _ham_path_search(g: Graph, start: int, goal: Optional[int],
                     blocked: int = 0) -> Optional[list[int]]:
    """A simple path from start covering all non-blocked vertices, ending at
    goal when given. Returns the path or None."""
    n = g.n
    adj = g.adj_bits
    full = ((1 << n) - 1) & ~blocked
    if not (full >> start & 1):
        return None
    if goal is not None and not (full >> goal & 1):
        return None
    target_count = bin(full).count("1")
    path = [start]

    def reachable_ok(cur: int, visited: int) -> bool:
        # Every unvisited vertex must be reachable from the head through
        # unvisited vertices, otherwise no extension can cover it.
        todo = full & ~visited
        if not todo:
            return True
        seen = adj[cur] & todo
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & todo & ~seen
            seen |= frontier
        return seen & todo == todo

    def rec(cur: int, visited: int) -> bool:
        if len(path) == target_count:
            return goal is None or cur == goal
        if not reachable_ok(cur, visited):
            return False
        free = adj[cur] & full & ~visited
        while free:
            b = free & -free
            free ^= b
            w = b.bit_length() - 1
            if w == goal and len(path) != target_count - 1:
                continue
            path.append(w)
            if rec(w, visited | b):
                return True
            path.pop()
        return False

    if target_count == 1:
        return [start] if goal in (None, start) else None
    return path if rec(start, 1 << start) else None


def hamiltonian_path_between(g: Graph, u: int, v: int,
                             limit: int = HAMILTONIAN_LIMIT) -> Optional[list[int]]:
    """A Hamiltonian u-v path, or None. Exact."""
    _check_guard(g, limit, "hamiltonian path")
    if u == v:
        raise GraphError("endpoints of a hamiltonian path must differ")
    return _ham_path_search(g, u, v)


def has_hamiltonian_path(g: Graph, limit: int = HAMILTONIAN_LIMIT) -> bool:
    return hamiltonian_path(g, limit) is not None


def hamiltonian_path(g: Graph, limit: int = HAMILTONIAN_LIMIT) -> Optional[list[int]]:
    """Some Hamiltonian path, or None. Exact."""
    _check_guard(g, limit, "hamiltonian path")
    if g.n == 1:
        return [0]
    # A path must start at a vertex of minimum degree's component anyway;
    # trying every start is exact and cheap at these sizes.
    for s in range(g.n):
        found = _ham_path_search(g, s, None)
        if found is not None:
            return found
    return None


def hamiltonian_cycle(g: Graph, limit: int = HAMILTONIAN_LIMIT) -> Optional[list[int]]:
    """A Hamiltonian cycle as a vertex list (closing edge implied), or None."""
    _check_guard(g, limit, "hamiltonian cycle")
    if g.n < 3:
        return None
    # Anchor the cycle at vertex 0: find a Hamiltonian path from 0 whose far
    # end is adjacent to 0.
    n = g.n
    adj = g.adj_bits
    full = (1 << n) - 1
    path = [0]

    def rec(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[cur] & 1)
        todo = full & ~visited
        seen = adj[cur] & todo
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & todo & ~seen
            seen |= frontier
        if seen & todo != todo:
            return False
        free = adj[cur] & ~visited
        while free:
            b = free & -free
            free ^= b
            w = b.bit_length() - 1
            path.append(w)
            if rec(w, visited | b):
                return True
            path.pop()
        return False

    return path if rec(0, 1) else None


def is_hamiltonian(g: Graph, limit: int = HAMILTONIAN_LIMIT) -> bool:
    return hamiltonian_cycle(g, limit) is not None


# ---------------------------------------------------------------------------
# Spanning theta detection

def find_spanning_theta(g: Graph,
                        limit: int = HAMILTONIAN_LIMIT) -> Optional[ThetaCertificate]:
    """Search for a spanning theta subgraph with two 2-paths: junctions u,v
    joined by 2-paths through x and y plus a path through every other vertex.

    Exhaustive over junction pairs and common-neighbor pairs, with a
    Hamiltonian u-v search on the rest. Exact; None means no such subgraph.
    """
    _check_guard(g, limit, "spanning theta")
    if g.n < 5:
        return None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = [w for w in g.adj[u] if g.has_edge(v, w)]
            for x, y in combinations(common, 2):
                blocked = (1 << x) | (1 << y)
                long_path = _ham_path_search(g, u, v, blocked=blocked)
                if long_path is not None:
                    cert = ThetaCertificate(u, v, x, y, tuple(long_path))
                    check_theta_certificate(g, cert)
                    return cert
    return None


def check_theta_certificate(g: Graph, cert: ThetaCertificate) -> None:
    """Independently re-verify a certificate edge by edge; raises on failure."""
    u, v, x, y = cert.u, cert.v, cert.x, cert.y
    p = cert.long_path
    if x == y or len({u, v, x, y}) != 4:
        raise GraphError("junctions and 2-path middles must be distinct")
    for mid in (x, y):
        if not (g.has_edge(u, mid) and g.has_edge(v, mid)):
            raise GraphError(f"vertex {mid} is not adjacent to both junctions")
    if p[0] != u or p[-1] != v:
        raise GraphError("long path must run from one junction to the other")
    if len(set(p)) != len(p):
        raise GraphError("long path revisits a vertex")
    if set(p) != set(range(g.n)) - {x, y}:
        raise GraphError("long path must cover every vertex except the middles")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"long path uses the non-edge ({a},{b})")


# ---------------------------------------------------------------------------
# Enumeration of small connected graphs

def _edge_positions(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _mask_to_adj(n: int, mask: int, pos: list[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        m ^= b
        u, v = pos[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _adj_connected(n: int, adj: list[int]) -> bool:
    seen = 1
    frontier = adj[0]
    while frontier & ~seen:
        seen |= frontier
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt
    return (seen | frontier) == (1 << n) - 1


def _refine_colors(n: int, adj: list[int]) -> list[int]:
    """Iterated neighborhood-color refinement; returns stable vertex colors."""
    colors = [bin(adj[v]).count("1") for v in range(n)]
    for _ in range(n):
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                b = m & -m
                m ^= b
                nb.append(colors[b.bit_length() - 1])
            sigs.append((colors[v], tuple(sorted(nb))))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _canonical_key(n: int, adj: list[int]) -> tuple[int, ...]:
    """Canonical isomorphism key: the lexicographically smallest column-wise
    adjacency encoding over all relabelings that respect the refined color
    classes. Exact, since any isomorphism preserves the classes; pruned
    branch-and-bound keeps symmetric graphs cheap."""
    colors = _refine_colors(n, adj)
    # Labels are handed out class by class in color order, so candidates for
    # label k are exactly the unused vertices of the class that owns slot k.
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    slot_class: list[list[int]] = []
    for c in sorted(groups):
        slot_class.extend([groups[c]] * len(groups[c]))
    best: list[Optional[int]] = [None] * n
    chosen = [0] * n  # chosen[k] = original vertex with label k

    def rec(k: int, used: int) -> None:
        if k == n:
            return
        for w in slot_class[k]:
            if used >> w & 1:
                continue
            aw = adj[w]
            chunk = 0
            for j in range(k):
                chunk |= (aw >> chosen[j] & 1) << j
            bk = best[k]
            if bk is None or chunk < bk:
                best[k] = chunk
                for i in range(k + 1, n):
                    best[i] = None
            elif chunk > bk:
                continue
            chosen[k] = w
            rec(k + 1, used | (1 << w))

    rec(0, 0)
    return tuple(c if c is not None else 0 for c in best)


def enumerate_connected_graphs(n: int, *, up_to_iso: bool = False,
                               limit: int = ENUMERATION_LIMIT) -> Iterator[Graph]:
    """Every connected simple graph on n labeled vertices exactly once.

    With up_to_iso, exactly one representative per isomorphism class is
    produced (exact deduplication: candidates are restricted to labelings
    with non-increasing degrees and reduced to a canonical edge mask).
    """
    if n > limit:
        raise SearchCeilingExceeded(
            f"graph enumeration limited to {limit} vertices, got {n}")
    if n < 1:
        raise GraphError("need at least one vertex")
    pos = _edge_positions(n)
    total = 1 << len(pos)
    if not up_to_iso:
        for mask in range(total):
            adj = _mask_to_adj(n, mask, pos)
            if _adj_connected(n, adj):
                yield Graph(n, [pos[i] for i in range(len(pos)) if mask >> i & 1])
        return
    seen: set[tuple[int, ...]] = set()
    min_edges = n - 1
    for mask in range(total):
        if bin(mask).count("1") < min_edges:
            continue
        adj = _mask_to_adj(n, mask, pos)
        degs = [bin(a).count("1") for a in adj]
        if any(degs[i] < degs[i + 1] for i in range(n - 1)):
            continue  # only consider degree-sorted labelings
        if not _adj_connected(n, adj):
            continue
        canon = _canonical_key(n, adj)
        if canon in seen:
            continue
        seen.add(canon)
        yield Graph(n, [pos[i] for i in range(len(pos)) if mask >> i & 1])
