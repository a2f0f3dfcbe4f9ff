"""Game sessions: one human against the engine, rules enforced server-side.

A session owns the authoritative state, the per-epoch body history for the
repetition rule, and the recorded trace. All transitions go through the
rules engine; the engine player answers synchronously whenever it holds the
turn. Engine choices fall down a ladder: exact solver within the session's
state ceiling, then an applicable proof policy, then a labeled greedy
fallback, so replies are always explicit about their strength.
"""

from __future__ import annotations

import threading
import uuid
from typing import Optional

from .. import engine as rules
from ..engine import (GameStatus, IllegalMoveError, MoveKind, ONGOING,
                      SnakeState, TRACE_FORMAT)
from ..graph import Graph, SearchCeilingExceeded
from ..graph_io import to_json_doc
from ..solver import Solver
from ..strategies import (PlacerPolicy, SnakePolicy, applicable_placer_policy,
                          applicable_snake_policy, greedy_placer_vertex,
                          greedy_snake_move)


class SessionError(Exception):
    def __init__(self, code: str, message: str, rule: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.rule = rule


class GameSession:
    def __init__(self, graph: Graph, human_role: str,
                 engine_max_states: int = 200_000):
        if human_role not in ("snake", "placer"):
            raise ValueError("human_role must be 'snake' or 'placer'")
        self.id = uuid.uuid4().hex[:12]
        self.graph = graph
        self.human_role = human_role
        self.engine_role = "placer" if human_role == "snake" else "snake"
        self.lock = threading.Lock()
        self.state: Optional[SnakeState] = None  # None until the first apple
        self.prior_bodies: list[tuple[int, ...]] = []
        self.status: GameStatus = ONGOING
        self.first_apple: Optional[int] = None
        self.events: list[dict] = []
        self.moves_played = 0
        self.engine_note: Optional[str] = None
        self._solver = Solver(graph, max_states=engine_max_states)
        self._snake_policy: Optional[SnakePolicy] = None
        self._placer_policy: Optional[PlacerPolicy] = None
        self._policies_probed = False

    # -- turn bookkeeping ----------------------------------------------------

    def turn(self) -> str:
        if not self.status.ongoing:
            return "over"
        if self.state is None or self.state.apple is None:
            return "placer"
        return "snake"

    def _require_turn(self, role: str) -> None:
        if not self.status.ongoing:
            raise SessionError("game-over", "the game is over")
        current = self.turn()
        if current != role:
            raise SessionError(
                "out-of-turn",
                f"it is the {current}'s turn, not the {role}'s")

    # -- transitions ---------------------------------------------------------

    def _record(self, event: dict) -> None:
        self.events.append(event)

    def _apply_placement(self, vertex: int, by: str,
                         source: Optional[str]) -> dict:
        if self.state is None:
            self.state = rules.new_game(self.graph, vertex)
            self.first_apple = vertex
            event = {"type": "apple", "vertex": vertex, "by": by}
        else:
            self.state = rules.place_apple(self.graph, self.state, vertex)
            event = {"type": "apple", "vertex": vertex, "by": by}
        if source:
            event["source"] = source
        self._record(event)
        self.status = rules.status(self.graph, self.state, self.prior_bodies)
        return event

    def _apply_move(self, target: int, by: str,
                    source: Optional[str]) -> dict:
        assert self.state is not None
        kind = rules.classify_move(self.graph, self.state, target)
        prev_body = self.state.body
        self.state = rules.apply_move(self.graph, self.state, target)
        self.moves_played += 1
        if kind is MoveKind.EAT:
            self.prior_bodies = []
        else:
            self.prior_bodies.append(prev_body)
        event = {"type": "move", "target": target, "by": by,
                 "kind": kind.value}
        if source:
            event["source"] = source
        self._record(event)
        self.status = rules.status(self.graph, self.state, self.prior_bodies)
        return event

    # -- human actions -------------------------------------------------------

    def human_place(self, vertex: int) -> list[dict]:
        self._require_turn("placer")
        if self.human_role != "placer":
            raise SessionError("out-of-turn", "the engine is the placer")
        events = [self._try(self._apply_placement, vertex, "human", None)]
        events += self.engine_drive()
        return events

    def human_move(self, target: int) -> list[dict]:
        self._require_turn("snake")
        if self.human_role != "snake":
            raise SessionError("out-of-turn", "the engine is the snake")
        events = [self._try(self._apply_move, target, "human", None)]
        events += self.engine_drive()
        return events

    def _try(self, fn, value, by, source) -> dict:
        try:
            return fn(value, by, source)
        except IllegalMoveError as e:
            raise SessionError("illegal-move", str(e), rule=e.rule) from e

    # -- engine --------------------------------------------------------------

    def _probe_policies(self) -> None:
        # Both roles are probed: the engine plays one side, hints may need
        # the other.
        if self._policies_probed:
            return
        self._policies_probed = True
        try:
            self._snake_policy = applicable_snake_policy(self.graph)
        except SearchCeilingExceeded:
            pass
        try:
            self._placer_policy = applicable_placer_policy(self.graph)
        except SearchCeilingExceeded:
            pass

    def engine_drive(self) -> list[dict]:
        """Let the engine act until the turn returns to the human or the
        game ends. Placer turns produce one placement; snake turns may chain
        several moves (the snake keeps moving until it eats)."""
        events: list[dict] = []
        guard = 0
        while self.status.ongoing and self.turn() == self.engine_role:
            guard += 1
            if guard > 10_000:
                raise SessionError("engine-stalled",
                                   "engine produced too many moves")
            if self.engine_role == "placer":
                vertex, source = self._engine_placement()
                events.append(self._apply_placement(vertex, "engine", source))
            else:
                target, source = self._engine_snake_move()
                events.append(self._apply_move(target, "engine", source))
        if events:
            self.engine_note = events[-1].get("source")
        return events

    def _engine_placement(self) -> tuple[int, str]:
        g = self.graph
        if self.state is None:
            # Opening vertex: prefer one the solver can refute.
            try:
                for a0 in range(g.n):
                    if any(not self._solver._value((a0,), 1 << a0, a1)
                           for a1 in range(g.n) if a1 != a0):
                        return a0, "solver"
                return 0, "solver"
            except SearchCeilingExceeded:
                self._probe_policies()
                if self._placer_policy is not None:
                    try:
                        return (self._placer_policy.choose_start(g, {}),
                                f"policy:{self._placer_policy.name}")
                    except Exception:
                        pass
                return 0, "greedy"
        try:
            return self._solver.optimal_move(self.state, "placer"), "solver"
        except SearchCeilingExceeded:
            pass
        self._probe_policies()
        if self._placer_policy is not None:
            try:
                vertex = self._placer_policy.place(g, self.state, {})
                if vertex not in self.state.body:
                    return vertex, f"policy:{self._placer_policy.name}"
            except Exception:
                pass
        return greedy_placer_vertex(g, self.state), "greedy"

    def _engine_snake_move(self) -> tuple[int, str]:
        g = self.graph
        state = self.state
        assert state is not None and state.apple is not None
        legal = [t for t, _ in rules.legal_moves(g, state)]
        try:
            step = self._solver.winning_step(state)
            if step is not None:
                return step, "solver"
            # Lost position: prolong honestly without repeating if possible.
            fresh = [t for t in legal
                     if ((t,) + state.body[:-1]) not in self.prior_bodies]
            return (fresh[0] if fresh else legal[0]), "solver"
        except SearchCeilingExceeded:
            pass
        self._probe_policies()
        if self._snake_policy is not None:
            try:
                target = self._snake_policy.choose(g, state, {})
                if target in legal:
                    return target, f"policy:{self._snake_policy.name}"
            except Exception:
                pass
        return greedy_snake_move(g, state), "greedy"

    # -- hints and views -----------------------------------------------------

    def hint(self) -> tuple[int, str]:
        """Suggestion for the human's current decision, produced by the same
        ladder the engine plays with and labeled with its source, so the
        caller knows whether it is provably optimal."""
        if not self.status.ongoing:
            raise SessionError("game-over", "the game is over")
        turn = self.turn()
        human_turn = ((turn == "snake" and self.human_role == "snake")
                      or (turn == "placer" and self.human_role == "placer"))
        if not human_turn:
            raise SessionError("out-of-turn", "it is the engine's turn")
        if turn == "placer":
            return self._engine_placement()
        return self._engine_snake_move()

    def view(self) -> dict:
        state = self.state
        turn = self.turn()
        if turn == "snake":
            turn_label = "human-snake" if self.human_role == "snake" else "engine"
        elif turn == "placer":
            turn_label = ("human-placer" if self.human_role == "placer"
                          else "engine")
        else:
            turn_label = "over"
        legal = []
        if state is not None and state.apple is not None \
                and self.status.ongoing:
            legal = [{"target": t, "kind": k.value}
                     for t, k in rules.legal_moves(self.graph, state)]
        return {
            "session_id": self.id,
            "graph": to_json_doc(self.graph),
            "human_role": self.human_role,
            "body": list(state.body) if state else [],
            "apple": state.apple if state else None,
            "length": state.length if state else 0,
            "status": {"outcome": self.status.outcome.value,
                       "loss_reason": self.status.loss_reason.value
                       if self.status.loss_reason else None},
            "turn": turn_label,
            "legal_moves": legal,
            "moves_played": self.moves_played,
            "engine_note": self.engine_note,
        }

    def trace(self) -> dict:
        return {
            "format": TRACE_FORMAT,
            "graph": to_json_doc(self.graph),
            "first_apple": self.first_apple,
            "events": [
                {k: v for k, v in e.items() if k in ("type", "vertex",
                                                     "target")}
                for e in self.events[1:]  # the opening apple is first_apple
            ],
        }


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def create(self, graph: Graph, human_role: str,
               engine_max_states: int) -> GameSession:
        session = GameSession(graph, human_role, engine_max_states)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionError("unknown-session",
                               f"no session {session_id!r}")
        return session
