"""Snake on a graph: exact solving, structural characterization,
proof-derived strategies, the grid-graph hardness reduction, and an
interactive play service."""

__version__ = "0.1.0"

from .graph import (Graph, GraphError, SearchCeilingExceeded, bipartition,
                    build_theta, circumference, complete_bipartite,
                    complete_graph, components_after_removal, cut_vertices,
                    cycle_graph, girth, grid_from_coords, induced_subgraph,
                    is_complete, is_connected, path_graph, rectangular_grid,
                    shortest_cycle)
from .search import (ThetaCertificate, check_theta_certificate,
                     enumerate_connected_graphs, find_spanning_theta,
                     hamiltonian_cycle, hamiltonian_path,
                     hamiltonian_path_between, has_hamiltonian_path,
                     is_hamiltonian)
from .engine import (GameStatus, IllegalMoveError, LossReason, MoveKind,
                     Outcome, SnakeState, apply_move, head_graph,
                     legal_moves, new_game, place_apple, replay_trace,
                     status)
from .solver import (Solver, WinVerdict, reachable_same_length, solve_graph,
                     solve_state, winnable)
from .classify import Classification, Reason, Verdict, classify, \
    decide_cut_vertex, decide_odd_bipartite, verify_certificate
from .strategies import (PolicyInapplicableError, ValidationReport,
                         cut_vertex_snake_policy, girth_placer_policy,
                         hamiltonian_snake_policy, make_policy,
                         odd_bipartite_placer_policy, theta_snake_policy,
                         connectivity_placer_policy, validate_placer_policy,
                         validate_snake_policy)
from .reduction import (GadgetAttachment, ReductionResult,
                        enumerate_grid_cell_sets, reduce_grid, verify_gadget)
