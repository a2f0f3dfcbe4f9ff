import pytest

from snakegraph.graph import Graph
from snakegraph.search import enumerate_connected_graphs


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def double_complete(m: int) -> Graph:
    """Two complete graphs K_{m+1} sharing the single vertex m."""
    cut = m
    p1 = list(range(m))
    p2 = list(range(m + 1, 2 * m + 1))
    edges = []
    for part in (p1, p2):
        verts = part + [cut]
        edges += [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]
    return Graph(2 * m + 1, edges)


def triangle_plus_k4() -> Graph:
    """A triangle and a K4 sharing vertex 2 (unequal sides)."""
    return Graph(6, [(0, 1), (1, 2), (2, 0),
                     (2, 3), (3, 4), (4, 5), (5, 2), (3, 5), (2, 4)])


def two_squares() -> Graph:
    """Two 4-cycles sharing vertex 0 (equal but incomplete sides)."""
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0),
                     (0, 4), (4, 5), (5, 6), (6, 0)])


def k23_minus_edge() -> Graph:
    """Odd bipartite, no spanning theta: parts {0,1} and {2,3,4} minus
    the edge (1,4)."""
    return Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)])


def tadpole(cycle_len: int, tail_len: int) -> Graph:
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    edges.append((0, cycle_len))
    edges += [(cycle_len + i, cycle_len + i + 1) for i in range(tail_len - 1)]
    return Graph(cycle_len + tail_len, edges)


@pytest.fixture(scope="session")
def graphs_by_size():
    """Connected graphs up to isomorphism for n=3..6, enumerated once."""
    return {n: list(enumerate_connected_graphs(n, up_to_iso=True))
            for n in range(3, 7)}


@pytest.fixture(scope="session")
def graphs_n7():
    return list(enumerate_connected_graphs(7, up_to_iso=True))


@pytest.fixture(scope="session")
def winnable_cache():
    """Shared solver verdict cache keyed by (n, edges)."""
    from snakegraph.solver import Solver
    cache: dict = {}

    def lookup(g: Graph) -> bool:
        key = (g.n, g.edges)
        if key not in cache:
            cache[key] = Solver(g).winnable()[0]
        return cache[key]

    return lookup
