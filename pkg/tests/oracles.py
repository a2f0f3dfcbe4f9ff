"""Brute-force oracles, independent of the library's search algorithms.

Everything here enumerates permutations or all simple cycles directly, so it
is only usable on tiny graphs; the tests use these to pin down expected
values for the real implementations.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

from snakegraph.graph import Graph


def all_simple_cycles(g: Graph) -> list[list[int]]:
    """Every simple cycle, one representative per vertex set rotation."""
    cycles = []
    seen = set()
    for size in range(3, g.n + 1):
        for verts in combinations(range(g.n), size):
            for perm in permutations(verts[1:]):
                order = (verts[0],) + perm
                closed = order + (order[0],)
                if all(g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
                    key = frozenset(zip(closed, closed[1:]))
                    key = frozenset(frozenset(e) for e in key)
                    if key not in seen:
                        seen.add(key)
                        cycles.append(list(order))
    return cycles


def oracle_girth(g: Graph) -> float:
    cycles = all_simple_cycles(g)
    return min((len(c) for c in cycles), default=math.inf)


def oracle_circumference(g: Graph) -> int:
    cycles = all_simple_cycles(g)
    return max((len(c) for c in cycles), default=0)


def oracle_hamiltonian_path(g: Graph) -> bool:
    for perm in permutations(range(g.n)):
        if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            return True
    return False


def oracle_hamiltonian_cycle(g: Graph) -> bool:
    if g.n < 3:
        return False
    for perm in permutations(range(1, g.n)):
        order = (0,) + perm
        closed = order + (0,)
        if all(g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
            return True
    return False


def oracle_spanning_theta_exists(g: Graph) -> bool:
    """Junction pair + middle pair + a permutation forming the long path."""
    for u, v in combinations(range(g.n), 2):
        commons = [w for w in range(g.n)
                   if w not in (u, v) and g.has_edge(u, w) and g.has_edge(v, w)]
        for x, y in combinations(commons, 2):
            rest = [w for w in range(g.n) if w not in (u, v, x, y)]
            for perm in permutations(rest):
                path = (u,) + perm + (v,)
                if all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
                    return True
    return False


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    for perm in permutations(range(a.n)):
        if all(b.has_edge(perm[u], perm[v]) for u, v in a.edges):
            return True
    return False


def oracle_opening_values(g: Graph) -> dict[tuple[int, int], bool]:
    """Game-tree value of every opening pair, applying the rules verbatim:
    the snake moves one step at a time, bodies seen at the current length
    are tracked explicitly, and entering one again loses on the spot. No
    fixed-length reachability shortcut, so this independently checks the
    production solver's epoch-closure argument."""
    n = g.n
    memo: dict = {}

    def snake_value(body: tuple, apple: int, seen: frozenset) -> bool:
        key = (body, apple, seen)
        if key in memo:
            return memo[key]
        memo[key] = False  # cycles through identical keys cannot help
        head = body[0]
        tail = body[-1]
        occupied = set(body)
        result = False
        for t in g.adj[head]:
            if t == apple:
                grown = (t,) + body
                if len(grown) == n:
                    result = True
                    break
                if all(snake_value(grown, u, frozenset({grown}))
                       for u in range(n) if u not in grown):
                    result = True
                    break
            elif t not in occupied or (t == tail and len(body) >= 3):
                nxt = (t,) + body[:-1]
                if nxt in seen:
                    continue  # repetition loses; never helps the snake
                if snake_value(nxt, apple, seen | {nxt}):
                    result = True
                    break
        memo[key] = result
        return result

    return {(a0, a1): snake_value((a0,), a1, frozenset({(a0,)}))
            for a0 in range(n) for a1 in range(n) if a1 != a0}


def oracle_winnable(g: Graph) -> bool:
    return all(oracle_opening_values(g).values())
