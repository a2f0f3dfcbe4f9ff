"""Rules of the snake game on a graph.

The snake occupies a simple path, head first. Each turn the head moves to an
adjacent vertex that is unoccupied or the current tail (the tail move is
disallowed at lengths 1 and 2, where it would reuse the occupied edge).
Moving onto the apple grows the snake by one and the adversary immediately
places the next apple on an unoccupied vertex. The snake wins at length n; it
loses when it has no legal move, or when it repeats an earlier position.

A position is the body sequence alone. Because the apple never moves within
one length epoch, "repeats a position" reads the same whether positions are
bodies or (body, apple) pairs: bodies at equal length always belong to the
same epoch, so the two readings coincide. Histories are therefore kept per
length epoch only.

The game starts with the adversary naming the first apple vertex, where the
snake spawns at length 1; the second apple must then be placed elsewhere
before the snake first moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .graph import Graph, GraphError, induced_subgraph


class MoveKind(Enum):
    EAT = "eat"          # head to the apple; tail stays, length grows by one
    STEP = "step"        # head to an unoccupied non-apple vertex; tail advances
    ROTATE = "rotate"    # head to the tail vertex; occupied set unchanged


class Outcome(Enum):
    ONGOING = "ongoing"
    SNAKE_WINS = "snake_wins"
    SNAKE_LOSES = "snake_loses"


class LossReason(Enum):
    STUCK = "stuck"
    REPETITION = "repetition"


@dataclass(frozen=True)
class GameStatus:
    outcome: Outcome
    loss_reason: Optional[LossReason] = None

    @property
    def ongoing(self) -> bool:
        return self.outcome is Outcome.ONGOING


ONGOING = GameStatus(Outcome.ONGOING)
SNAKE_WINS = GameStatus(Outcome.SNAKE_WINS)
LOST_STUCK = GameStatus(Outcome.SNAKE_LOSES, LossReason.STUCK)
LOST_REPETITION = GameStatus(Outcome.SNAKE_LOSES, LossReason.REPETITION)


class IllegalMoveError(ValueError):
    """A move or placement that breaks a rule; ``rule`` names which one."""

    def __init__(self, rule: str, message: str):
        super().__init__(message)
        self.rule = rule


RULE_ADJACENCY = "head-must-move-to-adjacent-vertex"
RULE_SIMPLE_PATH = "head-may-only-enter-unoccupied-or-tail"
RULE_SHORT_TAIL = "tail-move-disallowed-at-length-at-most-2"
RULE_APPLE_UNOCCUPIED = "apple-must-be-on-unoccupied-vertex"
RULE_APPLE_PRESENT = "apple-already-on-the-graph"
RULE_APPLE_MISSING = "snake-cannot-move-before-apple-is-placed"


@dataclass(frozen=True)
class SnakeState:
    """Snake body (head first) plus the current apple vertex, if any.

    ``apple`` is None exactly between an eat and the adversary's next
    placement. States are immutable; apply_move returns a new state.
    """
    body: tuple[int, ...]
    apple: Optional[int] = None

    @property
    def head(self) -> int:
        return self.body[0]

    @property
    def tail(self) -> int:
        return self.body[-1]

    @property
    def length(self) -> int:
        return len(self.body)

    def occupied(self) -> frozenset[int]:
        return frozenset(self.body)


def check_state(g: Graph, state: SnakeState) -> None:
    """Raise GraphError unless the state satisfies every invariant."""
    body = state.body
    if not 1 <= len(body) <= g.n:
        raise GraphError(f"body length {len(body)} out of range")
    if len(set(body)) != len(body):
        raise GraphError("body revisits a vertex")
    for v in body:
        if not 0 <= v < g.n:
            raise GraphError(f"body vertex {v} out of range")
    for a, b in zip(body, body[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"body uses the non-edge ({a},{b})")
    if state.apple is not None:
        if not 0 <= state.apple < g.n:
            raise GraphError(f"apple vertex {state.apple} out of range")
        if state.apple in body:
            raise GraphError("apple on an occupied vertex")


def new_game(g: Graph, first_apple: int) -> SnakeState:
    """Spawn the snake on the first apple vertex. The adversary must place
    the second apple before the snake can move."""
    if g.n < 3:
        raise GraphError("the game needs a graph with at least 3 vertices")
    if not 0 <= first_apple < g.n:
        raise GraphError(f"vertex {first_apple} out of range")
    return SnakeState(body=(first_apple,), apple=None)


def place_apple(g: Graph, state: SnakeState, vertex: int) -> SnakeState:
    if state.apple is not None:
        raise IllegalMoveError(RULE_APPLE_PRESENT,
                               "an apple is already on the graph")
    if not 0 <= vertex < g.n:
        raise GraphError(f"vertex {vertex} out of range")
    if vertex in state.body:
        raise IllegalMoveError(
            RULE_APPLE_UNOCCUPIED,
            f"vertex {vertex} is occupied by the snake")
    return SnakeState(body=state.body, apple=vertex)


def legal_moves(g: Graph, state: SnakeState) -> list[tuple[int, MoveKind]]:
    """Legal head targets with their move kinds, ascending by target.

    Requires the apple to be placed (the snake never moves while the board
    has no apple). Classification is a partition: the apple target is EAT,
    the tail target ROTATE, anything else STEP.
    """
    if state.apple is None:
        raise IllegalMoveError(RULE_APPLE_MISSING,
                               "place an apple before moving the snake")
    occupied = set(state.body)
    out = []
    for t in g.adj[state.head]:
        if t == state.apple:
            out.append((t, MoveKind.EAT))
        elif t not in occupied:
            out.append((t, MoveKind.STEP))
        elif t == state.tail and state.length >= 3:
            out.append((t, MoveKind.ROTATE))
    return out


def classify_move(g: Graph, state: SnakeState, target: int) -> MoveKind:
    """Kind of the move to ``target``; raises IllegalMoveError otherwise."""
    if state.apple is None:
        raise IllegalMoveError(RULE_APPLE_MISSING,
                               "place an apple before moving the snake")
    if not g.has_edge(state.head, target):
        raise IllegalMoveError(
            RULE_ADJACENCY,
            f"{target} is not adjacent to the head {state.head}")
    if target == state.apple:
        return MoveKind.EAT
    if target not in state.body:
        return MoveKind.STEP
    if target == state.tail:
        if state.length <= 2:
            raise IllegalMoveError(
                RULE_SHORT_TAIL,
                "the head may not move to the tail at length 2 or less")
        return MoveKind.ROTATE
    raise IllegalMoveError(
        RULE_SIMPLE_PATH,
        f"vertex {target} is occupied and is not the tail")


def apply_move(g: Graph, state: SnakeState, target: int) -> SnakeState:
    """Apply a legal head move; returns the successor state.

    After an EAT the apple is unset and the adversary must place the next
    one, unless the snake has just reached full length.
    """
    kind = classify_move(g, state, target)
    if kind is MoveKind.EAT:
        return SnakeState(body=(target,) + state.body, apple=None)
    return SnakeState(body=(target,) + state.body[:-1], apple=state.apple)


def head_graph(g: Graph, state: SnakeState) -> Graph:
    """Subgraph induced by the unoccupied vertices plus the head."""
    keep = (set(range(g.n)) - set(state.body)) | {state.head}
    sub, _ = induced_subgraph(g, keep)
    return sub


def status(g: Graph, state: SnakeState,
           history: Sequence[tuple[int, ...]] = ()) -> GameStatus:
    """Terminal check. ``history`` holds the prior bodies of the current
    length epoch; a body equal to any of them is a repetition loss."""
    if state.length == g.n:
        return SNAKE_WINS
    if any(state.body == past for past in history):
        return LOST_REPETITION
    if state.apple is not None and not legal_moves(g, state):
        return LOST_STUCK
    return ONGOING


# ---------------------------------------------------------------------------
# Game traces

TRACE_FORMAT = "snakegraph-trace/1"


@dataclass
class ReplayResult:
    final_state: SnakeState
    status: GameStatus
    moves: int


def replay_trace(g: Graph, trace: dict) -> ReplayResult:
    """Deterministically replay and validate a recorded game.

    Trace schema: {"format": ..., "first_apple": a0, "events": [...]} where
    each event is {"type": "apple", "vertex": v} or {"type": "move",
    "target": t}. Every event is validated against the rules; the repetition
    rule is enforced from the per-epoch body history.
    """
    if trace.get("format", TRACE_FORMAT) != TRACE_FORMAT:
        raise GraphError(f"unsupported trace format {trace.get('format')!r}")
    state = new_game(g, trace["first_apple"])
    st = ONGOING
    # Bodies held earlier at the current length; placements happen only at
    # the start of an epoch, so the list is empty whenever an apple lands.
    prior_bodies: list[tuple[int, ...]] = []
    moves = 0
    for event in trace.get("events", []):
        if not st.ongoing:
            raise GraphError("trace continues past the end of the game")
        etype = event.get("type")
        if etype == "apple":
            state = place_apple(g, state, event["vertex"])
        elif etype == "move":
            kind = classify_move(g, state, event["target"])
            prev_body = state.body
            state = apply_move(g, state, event["target"])
            moves += 1
            if kind is MoveKind.EAT:
                prior_bodies = []
            else:
                prior_bodies.append(prev_body)
        else:
            raise GraphError(f"unknown trace event {event!r}")
        st = status(g, state, prior_bodies)
    return ReplayResult(final_state=state, status=st, moves=moves)
