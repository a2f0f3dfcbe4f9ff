"""Exact adversarial solver for the snake game.

The solver decides, for a state or a whole graph, whether the snake can
force reaching full length against every apple placement.

Key reduction: between two eats the apple is fixed and only the snake moves,
so play at a fixed length is a walk on the graph whose nodes are snake
bodies. Any walk that reaches a body able to eat can be shortened to a
repetition-free one (drop the loop between two equal bodies), so the
repetition-loss rule never costs the snake a win: within an epoch, plain
reachability over bodies is exact. The solver therefore closes each epoch by
reachability and recurses only on eats:

    win(body, apple)  iff  some body reachable from it at this length can
    move onto the apple and either reaches full length or wins for every
    possible next placement.

Verdicts are memoized per (body, apple); one closure resolves an entire
reachable epoch component at once (winning bodies are those that can reach a
winning eat, found by a backward sweep over the closure's transition graph).

Determinism: placements, move generation, and closure order are all sorted,
so verdicts, witnesses, and node counts are reproducible. The memo table is
append-only with deterministic values, so concurrent readers are safe;
independent root placements may be solved in parallel across Solver
instances.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .engine import MoveKind, SnakeState, legal_moves
from .graph import Graph, GraphError, SearchCeilingExceeded

DEFAULT_MAX_STATES = 2_000_000


@dataclass(frozen=True)
class WinVerdict:
    snake_wins: bool
    best_move: Optional[int]
    node_count: int


Body = tuple[int, ...]


class Solver:
    """Memoized exact solver bound to one graph.

    ``max_states`` caps the number of memoized (body, apple) verdicts;
    exceeding it raises SearchCeilingExceeded instead of guessing.
    """

    def __init__(self, g: Graph, max_states: int = DEFAULT_MAX_STATES):
        self.graph = g
        self.max_states = max_states
        self._memo: dict[tuple[Body, int], bool] = {}

    @property
    def nodes(self) -> int:
        return len(self._memo)

    # -- core ---------------------------------------------------------------

    def _value(self, body: Body, occ: int, apple: int) -> bool:
        memo = self._memo
        key = (body, apple)
        cached = memo.get(key)
        if cached is not None:
            return cached
        g = self.graph
        n = g.n
        adj = g.adj_bits
        full = (1 << n) - 1
        apple_bit = 1 << apple

        # Reachability closure of this epoch component. Nodes indexed by
        # discovery order; edges recorded for the backward sweep.
        bodies: list[Body] = [body]
        occs: list[int] = [occ]
        index: dict[Body, int] = {body: 0}
        preds: list[list[int]] = [[]]
        eat_nodes: list[int] = []
        # Nodes whose value is already memoized True act as extra winners;
        # memoized False nodes are dead ends and are not expanded.
        boundary_winners: list[int] = []
        qi = 0
        while qi < len(bodies):
            b = bodies[qi]
            o = occs[qi]
            head = b[0]
            if adj[head] & apple_bit:
                eat_nodes.append(qi)
            targets = adj[head] & ~o & ~apple_bit
            tail = b[-1]
            succs = []
            while targets:
                tb = targets & -targets
                targets ^= tb
                t = tb.bit_length() - 1
                succs.append(((t,) + b[:-1], (o ^ (1 << tail)) | tb))
            if len(b) >= 3 and adj[head] >> tail & 1:
                succs.append(((tail,) + b[:-1], o))
            for nb, no in succs:
                j = index.get(nb)
                if j is None:
                    cached_succ = memo.get((nb, apple))
                    if cached_succ is True:
                        # No need to expand: reaching it wins.
                        j = len(bodies)
                        index[nb] = j
                        bodies.append(nb)
                        occs.append(no)
                        preds.append([qi])
                        boundary_winners.append(j)
                        continue
                    if cached_succ is False:
                        continue
                    j = len(bodies)
                    index[nb] = j
                    bodies.append(nb)
                    occs.append(no)
                    preds.append([])
                preds[j].append(qi)
            qi += 1

        if len(memo) + len(bodies) > self.max_states:
            raise SearchCeilingExceeded(
                f"solver state ceiling of {self.max_states} reached "
                f"(graph n={n}); raise max_states to continue")

        # Evaluate the eats: grow, then the placer picks the worst apple.
        winners: list[int] = list(boundary_winners)
        for i in eat_nodes:
            if (bodies[i], apple) in memo:
                continue  # a boundary winner already counted
            nb = (apple,) + bodies[i]
            if len(nb) == n:
                winners.append(i)
                continue
            no = occs[i] | apple_bit
            free = full & ~no
            ok = True
            while free:
                ub = free & -free
                free ^= ub
                if not self._value(nb, no, ub.bit_length() - 1):
                    ok = False
                    break
            if ok:
                winners.append(i)

        # Backward sweep: a body wins iff it can reach a winning eat.
        win_flags = [False] * len(bodies)
        dq = deque()
        for i in winners:
            if not win_flags[i]:
                win_flags[i] = True
                dq.append(i)
        while dq:
            i = dq.popleft()
            for p in preds[i]:
                if not win_flags[p]:
                    win_flags[p] = True
                    dq.append(p)

        for i, b in enumerate(bodies):
            memo.setdefault((b, apple), win_flags[i])
        return memo[key]

    # -- public api ----------------------------------------------------------

    def solve_state(self, state: SnakeState) -> WinVerdict:
        """Exact verdict for an ongoing state with the apple placed."""
        if state.apple is None:
            raise GraphError("solve_state needs the apple on the board")
        if state.length >= self.graph.n:
            raise GraphError("state is already terminal")
        before = len(self._memo)
        occ = 0
        for v in state.body:
            occ |= 1 << v
        wins = self._value(state.body, occ, state.apple)
        best = self._best_snake_move(state, occ, wins)
        return WinVerdict(snake_wins=wins, best_move=best,
                          node_count=len(self._memo) - before)

    def _move_value(self, state: SnakeState, occ: int,
                    target: int, kind: MoveKind) -> bool:
        g = self.graph
        if kind is MoveKind.EAT:
            nb = (target,) + state.body
            if len(nb) == g.n:
                return True
            no = occ | (1 << target)
            free = ((1 << g.n) - 1) & ~no
            while free:
                ub = free & -free
                free ^= ub
                if not self._value(nb, no, ub.bit_length() - 1):
                    return False
            return True
        nb = (target,) + state.body[:-1]
        if kind is MoveKind.ROTATE:
            no = occ
        else:
            no = (occ ^ (1 << state.tail)) | (1 << target)
        return self._value(nb, no, state.apple)

    def _best_snake_move(self, state: SnakeState, occ: int,
                         wins: bool) -> Optional[int]:
        moves = legal_moves(self.graph, state)
        if not moves:
            return None
        if not wins:
            return moves[0][0]
        for target, kind in moves:
            if self._move_value(state, occ, target, kind):
                return target
        raise AssertionError("winning state must have a winning move")

    def winning_step(self, state: SnakeState) -> Optional[int]:
        """First move of a shortest within-epoch path to a winning eat.

        Unlike best_move (any value-preserving move), this guarantees
        progress, so a winning snake driven by it never repeats a body.
        Returns None when the state is lost.
        """
        if state.apple is None:
            raise GraphError("winning_step needs the apple on the board")
        g = self.graph
        occ = 0
        for v in state.body:
            occ |= 1 << v
        if not self._value(state.body, occ, state.apple):
            return None
        seen = {state.body}
        layer: list[tuple[Body, int, Optional[int]]] = [(state.body, occ, None)]
        while layer:
            nxt: list[tuple[Body, int, Optional[int]]] = []
            for b, o, first in layer:
                st = SnakeState(body=b, apple=state.apple)
                for target, kind in legal_moves(g, st):
                    if kind is MoveKind.EAT:
                        if self._move_value(st, o, target, kind):
                            return first if first is not None else target
                        continue
                    nb = (target,) + b[:-1]
                    if nb in seen:
                        continue
                    seen.add(nb)
                    no = o if kind is MoveKind.ROTATE \
                        else (o ^ (1 << b[-1])) | (1 << target)
                    if not self._value(nb, no, state.apple):
                        continue
                    nxt.append((nb, no, first if first is not None else target))
            layer = nxt
        raise AssertionError("winning state must reach a winning eat")

    def placement_value(self, state: SnakeState, vertex: int) -> bool:
        """Snake's value after placing the apple on ``vertex``."""
        if state.apple is not None:
            raise GraphError("an apple is already on the board")
        if vertex in state.body:
            raise GraphError("cannot place the apple on the snake")
        occ = 0
        for v in state.body:
            occ |= 1 << v
        return self._value(state.body, occ, vertex)

    def optimal_move(self, state: SnakeState, role: str) -> int:
        """A move or placement achieving the game value for ``role``
        ("snake" or "placer"); ties break toward the smallest vertex id."""
        if role == "snake":
            verdict = self.solve_state(state)
            if verdict.best_move is None:
                raise GraphError("no legal move available")
            return verdict.best_move
        if role != "placer":
            raise ValueError(f"unknown role {role!r}")
        if state.apple is not None:
            raise GraphError("placer only moves while no apple is placed")
        candidates = sorted(set(range(self.graph.n)) - set(state.body))
        if not candidates:
            raise GraphError("no unoccupied vertex to place on")
        for u in candidates:
            if not self.placement_value(state, u):
                return u
        return candidates[0]

    def winnable(self) -> tuple[bool, Optional[tuple[int, int]]]:
        """Whole-graph verdict: can the snake win from every opening pair of
        apple placements? Returns the first losing (a0, a1) as witness."""
        g = self.graph
        for a0 in range(g.n):
            for a1 in range(g.n):
                if a1 == a0:
                    continue
                if not self._value((a0,), 1 << a0, a1):
                    return False, (a0, a1)
        return True, None


def solve_state(g: Graph, state: SnakeState,
                max_states: int = DEFAULT_MAX_STATES) -> WinVerdict:
    return Solver(g, max_states).solve_state(state)


def winnable(g: Graph, max_states: int = DEFAULT_MAX_STATES
             ) -> tuple[bool, Optional[tuple[int, int]]]:
    return Solver(g, max_states).winnable()


def reachable_same_length(g: Graph, state: SnakeState) -> set[Body]:
    """All bodies reachable from the state without eating: the fixed-length
    closure the solver trims each epoch to. Includes the start."""
    if state.apple is None:
        raise GraphError("the closure is defined with the apple fixed")
    apple_bit = 1 << state.apple
    adj = g.adj_bits
    occ = 0
    for v in state.body:
        occ |= 1 << v
    out: set[Body] = {state.body}
    queue: deque[tuple[Body, int]] = deque([(state.body, occ)])
    while queue:
        b, o = queue.popleft()
        head = b[0]
        tail = b[-1]
        targets = adj[head] & ~o & ~apple_bit
        while targets:
            tb = targets & -targets
            targets ^= tb
            nb = (tb.bit_length() - 1,) + b[:-1]
            if nb not in out:
                out.add(nb)
                queue.append((nb, (o ^ (1 << tail)) | tb))
        if len(b) >= 3 and adj[head] >> tail & 1:
            nb = (tail,) + b[:-1]
            if nb not in out:
                out.add(nb)
                queue.append((nb, o))
    return out


@dataclass(frozen=True)
class SolveReport:
    """JSON-ready whole-graph solve result."""
    winnable: bool
    witness: Optional[tuple[int, int]]
    nodes: int
    elapsed_ms: float

    def to_json_doc(self) -> dict:
        doc: dict = {"winnable": self.winnable, "nodes": self.nodes,
                     "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.witness is not None:
            doc["witness"] = {"first_apple": self.witness[0],
                              "second_apple": self.witness[1]}
        return doc


def solve_graph(g: Graph, max_states: int = DEFAULT_MAX_STATES) -> SolveReport:
    solver = Solver(g, max_states)
    t0 = time.perf_counter()
    ok, witness = solver.winnable()
    elapsed = (time.perf_counter() - t0) * 1000.0
    return SolveReport(winnable=ok, witness=witness,
                       nodes=solver.nodes, elapsed_ms=elapsed)
