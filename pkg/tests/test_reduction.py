import pytest

from snakegraph.graph import GraphError, grid_from_coords, rectangular_grid
from snakegraph.reduction import (GADGET_CELLS, enumerate_grid_cell_sets,
                                  reduce_grid, rightmost_top_vertex,
                                  verify_gadget)
from snakegraph.search import find_spanning_theta
from snakegraph.solver import winnable


class TestReduce:
    def test_2x2_hamiltonian_input(self):
        g = rectangular_grid(2, 2)
        res = reduce_grid(g)
        assert res.reduced
        assert res.gprime.n == g.n + len(GADGET_CELLS)
        assert res.gprime.n % 2 == 1
        assert find_spanning_theta(res.gprime) is not None

    def test_1x4_non_hamiltonian_input(self):
        g = rectangular_grid(4, 1)
        res = reduce_grid(g)
        assert res.reduced
        assert find_spanning_theta(res.gprime) is None
        assert not winnable(res.gprime)[0]

    def test_2x3_winnable_output(self):
        g = rectangular_grid(3, 2)
        res = reduce_grid(g)
        assert find_spanning_theta(res.gprime) is not None
        assert winnable(res.gprime)[0]

    def test_rightmost_top_selection(self):
        g = grid_from_coords([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)])
        assert rightmost_top_vertex(g) == (1, 1)

    def test_odd_input_rejected(self):
        with pytest.raises(GraphError):
            reduce_grid(grid_from_coords([(0, 0), (1, 0), (2, 0)]))

    def test_coordinate_free_input_rejected(self):
        from snakegraph.graph import cycle_graph
        with pytest.raises(GraphError):
            reduce_grid(cycle_graph(4))

    def test_missing_left_neighbor_short_circuits(self):
        g = grid_from_coords([(0, 0), (0, 1)])
        res = reduce_grid(g)
        assert not res.reduced and "hamiltonian" in res.short_circuit

    def test_tiny_input_short_circuits(self):
        g = grid_from_coords([(0, 0), (1, 0)])
        res = reduce_grid(g)
        assert not res.reduced

    def test_top_row_degree_constraint(self):
        # v's only possible neighbors are u and the cell below, so every
        # hamiltonian cycle of the input uses the edge uv
        g = rectangular_grid(3, 2)
        vx, vy = rightmost_top_vertex(g)
        v_idx = g.coords.index((vx, vy))
        assert g.degree(v_idx) <= 2


class TestVerifyGadget:
    def test_key_instances_pass(self):
        for g in (rectangular_grid(2, 2), rectangular_grid(4, 1),
                  rectangular_grid(3, 2)):
            res = reduce_grid(g)
            report = verify_gadget(g, res.gprime, res.attachment)
            assert report["passed"], report

    def test_long_cycle_check_on_thin_input(self):
        g = rectangular_grid(4, 1)
        res = reduce_grid(g)
        report = verify_gadget(g, res.gprime, res.attachment,
                               check_long_cycles=True)
        assert report["P3"] is True and report["passed"]

    def test_corrupted_gadget_detected(self):
        g = rectangular_grid(2, 2)
        res = reduce_grid(g)
        # drop one gadget cell: parity and attachment bookkeeping break
        coords = [c for c in res.gprime.coords
                  if c != res.attachment.gadget_coords[-1]]
        broken = grid_from_coords(coords)
        report = verify_gadget(g, broken, res.attachment)
        assert not report["passed"]

    def test_attachment_touches_only_u_and_v(self):
        g = grid_from_coords([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (3, 0)])
        res = reduce_grid(g)
        report = verify_gadget(g, res.gprime, res.attachment)
        assert report["P1"] and report["passed"]


class TestCorpus:
    def test_polyomino_counts(self):
        from collections import Counter
        counts = Counter(len(s) for s in enumerate_grid_cell_sets(5))
        assert dict(counts) == {1: 1, 2: 2, 3: 6, 4: 19, 5: 63}

    def test_biconditional_up_to_six_cells(self):
        checked = 0
        for shape in enumerate_grid_cell_sets(6):
            if len(shape) % 2 == 1:
                continue
            g = grid_from_coords(shape)
            res = reduce_grid(g)
            if not res.reduced:
                continue
            report = verify_gadget(g, res.gprime, res.attachment)
            assert report["P4"], (shape, report)
            checked += 1
        assert checked > 50
