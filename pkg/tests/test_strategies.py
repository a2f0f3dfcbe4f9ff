import pytest

from snakegraph.graph import (build_theta, complete_bipartite,
                              cycle_graph, path_graph, rectangular_grid)
from snakegraph.solver import winnable
from snakegraph.strategies import (PolicyInapplicableError,
                                   connectivity_placer_policy,
                                   cut_vertex_snake_policy,
                                   girth_placer_policy,
                                   hamiltonian_snake_policy, make_policy,
                                   odd_bipartite_placer_policy,
                                   theta_snake_policy, validate_placer_policy,
                                   validate_snake_policy, validate_policy)

from conftest import (bowtie, double_complete, k23_minus_edge, tadpole,
                      triangle_plus_k4, two_squares)


class TestHamiltonianSnake:
    def test_wins_on_cycles_and_grids(self):
        for g in (cycle_graph(5), cycle_graph(6), rectangular_grid(2, 4)):
            report = validate_snake_policy(g, hamiltonian_snake_policy(g))
            assert report.valid, report.failure

    def test_rejects_non_hamiltonian(self):
        with pytest.raises(PolicyInapplicableError):
            hamiltonian_snake_policy(build_theta(3, 4, 4))

    def test_rejects_bogus_cycle(self):
        with pytest.raises(PolicyInapplicableError):
            hamiltonian_snake_policy(cycle_graph(5), cycle=[0, 1, 2, 4, 3])


class TestThetaSnake:
    def test_wins_on_k23(self):
        g = build_theta(2, 2, 2)
        report = validate_snake_policy(g, theta_snake_policy(g))
        assert report.valid, report.failure

    def test_wins_with_forced_switches(self):
        g = build_theta(4, 2, 2)
        report = validate_snake_policy(g, theta_snake_policy(g))
        assert report.valid, report.failure

    def test_rejects_plain_cycle(self):
        with pytest.raises(PolicyInapplicableError):
            theta_snake_policy(cycle_graph(6))

    def test_wins_on_strict_supergraphs_of_the_theta(self):
        # the riding strategy only uses theta edges, so it must also win on
        # graphs that merely contain the spanning theta
        g = rectangular_grid(3, 3)
        report = validate_snake_policy(g, theta_snake_policy(g))
        assert report.valid, report.failure


class TestCutVertexSnake:
    def test_wins_on_doubled_completes(self):
        for m in (2, 3, 4):
            g = double_complete(m)
            report = validate_snake_policy(g, cut_vertex_snake_policy(g))
            assert report.valid, (m, report.failure)

    def test_rejects_unequal_parts(self):
        with pytest.raises(PolicyInapplicableError):
            cut_vertex_snake_policy(triangle_plus_k4())

    def test_rejects_incomplete_parts(self):
        with pytest.raises(PolicyInapplicableError):
            cut_vertex_snake_policy(two_squares())


class TestOddBipartitePlacer:
    def test_defeats_all_snakes_on_k23_minus_edge(self):
        g = k23_minus_edge()
        report = validate_placer_policy(g, odd_bipartite_placer_policy(g))
        assert report.valid, report.failure
        assert not winnable(g)[0]

    def test_rejects_non_bipartite(self):
        with pytest.raises(PolicyInapplicableError):
            odd_bipartite_placer_policy(bowtie())

    def test_rejects_theta_spanned(self):
        with pytest.raises(PolicyInapplicableError):
            odd_bipartite_placer_policy(rectangular_grid(3, 3))

    def test_rejects_even(self):
        with pytest.raises(PolicyInapplicableError):
            odd_bipartite_placer_policy(cycle_graph(6))


class TestConnectivityPlacer:
    def test_size_mismatch_fixture(self):
        g = triangle_plus_k4()
        report = validate_placer_policy(g, connectivity_placer_policy(g))
        assert report.valid, report.failure

    def test_incomplete_fixture(self):
        g = two_squares()
        report = validate_placer_policy(g, connectivity_placer_policy(g))
        assert report.valid, report.failure
        assert not winnable(g)[0]

    def test_degree_one_fixture(self):
        g = path_graph(3)
        report = validate_placer_policy(g, connectivity_placer_policy(g))
        assert report.valid, report.failure

    def test_three_components_fixture(self):
        g = complete_bipartite(1, 3)
        report = validate_placer_policy(g, connectivity_placer_policy(g))
        assert report.valid, report.failure

    def test_rejects_winnable_shape(self):
        with pytest.raises(PolicyInapplicableError):
            connectivity_placer_policy(bowtie())

    def test_rejects_two_connected(self):
        with pytest.raises(PolicyInapplicableError):
            connectivity_placer_policy(cycle_graph(5))


class TestGirthPlacer:
    def test_defeats_all_snakes_on_theta344(self):
        g = build_theta(3, 4, 4)
        report = validate_placer_policy(g, girth_placer_policy(g))
        assert report.valid, report.failure
        assert not winnable(g)[0]

    def test_tadpoles_and_trees(self):
        for g in (tadpole(7, 2), tadpole(9, 1), path_graph(8)):
            report = validate_placer_policy(g, girth_placer_policy(g))
            assert report.valid, report.failure

    def test_rejects_hamiltonian(self):
        with pytest.raises(PolicyInapplicableError):
            girth_placer_policy(cycle_graph(7))

    def test_rejects_small_girth(self):
        with pytest.raises(PolicyInapplicableError):
            girth_placer_policy(build_theta(4, 2, 2))


class TestPolicySolverAgreement:
    def test_snake_validations_match_winnable(self):
        for g, name in ((cycle_graph(5), "hamiltonian-snake"),
                        (build_theta(4, 2, 2), "theta-snake"),
                        (double_complete(2), "cut-vertex-snake")):
            report = validate_policy(g, name)
            assert report.valid == winnable(g)[0]

    def test_placer_validations_match_winnable(self):
        for g, name in ((k23_minus_edge(), "odd-bipartite-placer"),
                        (two_squares(), "connectivity-placer"),
                        (build_theta(3, 4, 4), "girth-placer")):
            report = validate_policy(g, name)
            assert report.valid
            assert not winnable(g)[0]


class TestApplicabilitySweep:
    def test_every_applicable_policy_validates_and_matches_solver(
            self, graphs_by_size, winnable_cache):
        """Whenever any factory accepts an enumerated graph, its validation
        verdict must be affirmative and must agree with the exact solver."""
        from snakegraph.strategies import (PLACER_POLICY_FACTORIES,
                                           SNAKE_POLICY_FACTORIES)
        snake_hits = placer_hits = 0
        for n in (3, 4, 5, 6):
            for g in graphs_by_size[n]:
                for factory in SNAKE_POLICY_FACTORIES.values():
                    try:
                        policy = factory(g)
                    except PolicyInapplicableError:
                        continue
                    report = validate_snake_policy(g, policy)
                    assert report.valid, (g.edges, policy.name,
                                          report.failure)
                    assert winnable_cache(g), (g.edges, policy.name)
                    snake_hits += 1
                for factory in PLACER_POLICY_FACTORIES.values():
                    try:
                        policy = factory(g)
                    except PolicyInapplicableError:
                        continue
                    report = validate_placer_policy(g, policy)
                    assert report.valid, (g.edges, policy.name,
                                          report.failure)
                    assert not winnable_cache(g), (g.edges, policy.name)
                    placer_hits += 1
        assert snake_hits >= 100 and placer_hits >= 80


class TestRegistry:
    def test_make_policy_roles(self):
        role, _ = make_policy("hamiltonian-snake", cycle_graph(4))
        assert role == "snake"
        role, _ = make_policy("girth-placer", build_theta(3, 4, 4))
        assert role == "placer"

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            make_policy("nonsense", cycle_graph(4))


def test_validator_flags_a_broken_policy():
    # a snake policy that walks into walls is rejected with a failure note
    from snakegraph.strategies import SnakePolicy

    class Stubborn(SnakePolicy):
        name = "stubborn"

        def choose(self, g, state, memory):
            return (state.head + 1) % g.n

    report = validate_snake_policy(path_graph(4), Stubborn())
    assert not report.valid
    assert report.failure


def test_girth6_theta_is_winnable_fixture():
    # smallest known non-hamiltonian snake-winnable graph of girth 6 found
    # by solver search; shows the girth bound is tight
    g = build_theta(3, 3, 3)
    from snakegraph.graph import girth
    from snakegraph.search import is_hamiltonian
    assert girth(g) == 6
    assert not is_hamiltonian(g)
    assert winnable(g)[0]
