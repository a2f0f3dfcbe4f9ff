"""Acceptance criteria, one test per criterion, all tolerances exact.

Each test prints a single summary line; run with ``pytest -s
tests/test_acceptance.py`` to watch them, or ``pytest -v`` to read the
pass/fail per criterion from the test ids.
"""

import random

from snakegraph.classify import Verdict, decide_cut_vertex
from snakegraph.graph import (bipartition, build_theta, cut_vertices, girth,
                              grid_from_coords, path_graph)
from snakegraph.search import (find_spanning_theta, has_hamiltonian_path,
                               is_hamiltonian)
from snakegraph.solver import Solver, winnable
from snakegraph.strategies import (connectivity_placer_policy,
                                   cut_vertex_snake_policy,
                                   girth_placer_policy,
                                   odd_bipartite_placer_policy,
                                   theta_snake_policy, validate_placer_policy,
                                   validate_snake_policy)
from snakegraph.reduction import (enumerate_grid_cell_sets, reduce_grid,
                                  verify_gadget)

from conftest import k23_minus_edge, tadpole, triangle_plus_k4, two_squares
from test_engine import random_playout


def _report(criterion: str, detail: str) -> None:
    print(f"[{criterion}] PASS: {detail}")


def test_a1_observation_suite(graphs_by_size, winnable_cache):
    """Solver verdicts never contradict the four structural observations on
    any connected graph with 3 to 6 vertices."""
    checked = violations = 0
    for n in (3, 4, 5, 6):
        for g in graphs_by_size[n]:
            win = winnable_cache(g)
            checked += 1
            if is_hamiltonian(g) and not win:
                violations += 1
            if not has_hamiltonian_path(g) and win:
                violations += 1
            parts = bipartition(g)
            if parts and abs(len(parts[0]) - len(parts[1])) > 1 and win:
                violations += 1
            if any(g.degree(v) == 1 for v in range(g.n)) and win:
                violations += 1
    assert violations == 0
    _report("A1", f"{checked} graphs, 0 observation violations")


def test_a2_odd_bipartite_theorem(graphs_by_size, graphs_n7, winnable_cache):
    """On every connected bipartite graph with 5 or 7 vertices, winnability
    coincides exactly with the existence of a spanning theta."""
    disagreements = checked = 0
    pool = graphs_by_size[5] + graphs_n7
    for g in pool:
        if bipartition(g) is None:
            continue
        checked += 1
        win = winnable_cache(g)
        theta = find_spanning_theta(g) is not None
        if win != theta:
            disagreements += 1
    assert disagreements == 0
    _report("A2", f"{checked} odd bipartite graphs, 0 disagreements")


def test_a3_connectivity_theorem(graphs_by_size, graphs_n7, winnable_cache):
    """On every connected graph with a cut vertex and at most 7 vertices,
    the cut-vertex characterization matches the solver exactly."""
    disagreements = checked = 0
    pool = [g for n in (3, 4, 5, 6) for g in graphs_by_size[n]] + graphs_n7
    for g in pool:
        if not cut_vertices(g):
            continue
        checked += 1
        verdict = decide_cut_vertex(g).verdict
        win = winnable_cache(g)
        if (verdict is Verdict.WINNABLE) != win:
            disagreements += 1
    assert disagreements == 0
    _report("A3", f"{checked} cut-vertex graphs, 0 disagreements")


def _spider():
    from snakegraph.graph import Graph
    # star with every edge subdivided once: a 7-vertex tree
    return Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


GIRTH_FIXTURES = [
    ("theta-3-4-4", build_theta(3, 4, 4)),
    ("tadpole-7-1", tadpole(7, 1)),
    ("tadpole-7-2", tadpole(7, 2)),
    ("tadpole-7-3", tadpole(7, 3)),
    ("tadpole-9-1", tadpole(9, 1)),
    ("path-8", path_graph(8)),
    ("path-10", path_graph(10)),
    ("spider-2-2-2", _spider()),
]


def test_a4_girth_theorem():
    """The girth-7 theta loses, its placer policy certifies the loss, and
    every curated non-hamiltonian graph of girth above 6 loses."""
    t344 = build_theta(3, 4, 4)
    assert not winnable(t344)[0]
    report = validate_placer_policy(t344, girth_placer_policy(t344))
    assert report.valid, report.failure
    fixtures = GIRTH_FIXTURES
    for name, g in fixtures:
        assert g.n <= 10
        assert girth(g) >= 7
        assert not is_hamiltonian(g)
        assert not winnable(g)[0], name
    _report("A4", f"theta(3,4,4) refuted and certified; "
                  f"{len(fixtures)} girth>=7 fixtures all lose")


def test_a5_reduction_biconditional():
    """Spanning theta in the reduced graph iff hamiltonian input, across
    every grid graph with at most 8 cells that admits the reduction; the
    winnability consequence is solver-checked on three instances."""
    checked = failures = 0
    for shape in enumerate_grid_cell_sets(8):
        if len(shape) % 2 == 1:
            continue
        g = grid_from_coords(shape)
        result = reduce_grid(g)
        if not result.reduced:
            continue
        report = verify_gadget(g, result.gprime, result.attachment)
        checked += 1
        if not report["P4"] or not report["passed"]:
            failures += 1
    assert failures == 0
    cross_checked = 0
    for cells in ([(0, 0), (1, 0), (0, 1), (1, 1)],
                  [(0, 0), (1, 0), (2, 0), (3, 0)],
                  [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]):
        g = grid_from_coords(cells)
        result = reduce_grid(g)
        win, _ = winnable(result.gprime)
        assert win == (find_spanning_theta(result.gprime) is not None)
        assert win == is_hamiltonian(g)
        cross_checked += 1
    _report("A5", f"{checked} reduced instances, 0 counterexamples; "
                  f"{cross_checked} solver cross-checks")


def test_a6_strategy_validation(winnable_cache):
    """Every proof policy beats the exhaustive adversary on its fixtures,
    and each verdict matches the solver where the ceiling permits."""
    from conftest import double_complete
    validations = 0
    for n in range(5, 12):
        g = build_theta(n - 3, 2, 2)
        report = validate_snake_policy(g, theta_snake_policy(g))
        assert report.valid, (n, report.failure)
        assert winnable_cache(g)
        validations += 1
    for m in (2, 3, 4):
        g = double_complete(m)
        report = validate_snake_policy(g, cut_vertex_snake_policy(g))
        assert report.valid, (m, report.failure)
        assert winnable_cache(g)
        validations += 1
    g = k23_minus_edge()
    report = validate_placer_policy(g, odd_bipartite_placer_policy(g))
    assert report.valid, report.failure
    assert not winnable_cache(g)
    validations += 1
    for g in (triangle_plus_k4(), two_squares(), path_graph(3)):
        report = validate_placer_policy(g, connectivity_placer_policy(g))
        assert report.valid, report.failure
        assert not winnable_cache(g)
        validations += 1
    _report("A6", f"{validations} policy validations, all solver-consistent")


def test_a7_engine_invariants(graphs_by_size):
    """10^5 random playouts with every state invariant and move-kind
    postcondition asserted on each transition."""
    from conftest import bowtie, double_complete
    fixtures = [bowtie(), build_theta(2, 2, 2), build_theta(4, 2, 2),
                double_complete(3), path_graph(4),
                grid_from_coords([(x, y) for x in range(3)
                                  for y in range(2)])]
    fixtures += graphs_by_size[5][:4]
    rng = random.Random(20260808)
    playouts = 100_000
    per_fixture = playouts // len(fixtures)
    done = 0
    for g in fixtures:
        for _ in range(per_fixture):
            random_playout(g, rng)  # asserts invariants internally
            done += 1
    while done < playouts:
        random_playout(fixtures[0], rng)
        done += 1
    assert done == playouts
    _report("A7", f"{done} playouts, 0 invariant violations")
