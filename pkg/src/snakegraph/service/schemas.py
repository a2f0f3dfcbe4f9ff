"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..graph import Graph
from ..graph_io import from_json_doc, to_json_doc
from ..solver import DEFAULT_MAX_STATES

Label = Union[int, str]


class GraphPayload(BaseModel):
    """The JSON graph document; arbitrary labels are densified on load."""
    vertices: list[Label]
    edges: list[list[Label]]
    coords: Optional[list[list[int]]] = None

    def to_graph(self) -> Graph:
        return from_json_doc(self.model_dump(exclude_none=True))

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphPayload":
        return cls(**to_json_doc(g))


class SolveRequest(BaseModel):
    graph: GraphPayload
    max_states: int = Field(default=DEFAULT_MAX_STATES, ge=1)


class WitnessPair(BaseModel):
    first_apple: int
    second_apple: int


class SolveResponse(BaseModel):
    winnable: bool
    witness: Optional[WitnessPair] = None
    nodes: int
    elapsed_ms: float


class ClassifyRequest(BaseModel):
    graph: GraphPayload


class ClassifyResponse(BaseModel):
    verdict: str
    reason: Optional[str] = None
    certificate: Optional[dict] = None


class ReduceRequest(BaseModel):
    graph: GraphPayload
    verify: bool = False
    check_long_cycles: bool = False


class ReduceResponse(BaseModel):
    reduced: bool
    short_circuit: Optional[str] = None
    gprime: Optional[GraphPayload] = None
    attachment: Optional[dict] = None
    report: Optional[dict] = None


class StrategyCheckRequest(BaseModel):
    graph: GraphPayload
    policy: str
    max_states: int = Field(default=DEFAULT_MAX_STATES, ge=1)


class StrategyCheckResponse(BaseModel):
    policy: str
    role: Optional[str] = None
    applicable: bool
    valid: bool
    leaves: int = 0
    depth: int = 0
    failure: Optional[str] = None


class EnumerateRequest(BaseModel):
    n: int = Field(ge=3, le=8)
    cross_check: bool = False
    up_to_iso: bool = True
    max_states: int = Field(default=DEFAULT_MAX_STATES, ge=1)


class Disagreement(BaseModel):
    edges: list[list[int]]
    classify_verdict: str
    solver_winnable: bool


class EnumerateResponse(BaseModel):
    n: int
    graphs: int
    decided: int
    unknown: int
    disagreements: list[Disagreement]


class CreateSessionRequest(BaseModel):
    graph: GraphPayload
    human_role: Literal["snake", "placer"]
    engine_max_states: int = Field(default=200_000, ge=1)


class LegalMove(BaseModel):
    target: int
    kind: str


class StatusView(BaseModel):
    outcome: str
    loss_reason: Optional[str] = None


class SessionView(BaseModel):
    session_id: str
    graph: GraphPayload
    human_role: str
    body: list[int]
    apple: Optional[int] = None
    length: int
    status: StatusView
    turn: Literal["human-snake", "human-placer", "engine", "over"]
    legal_moves: list[LegalMove] = []
    moves_played: int
    engine_note: Optional[str] = None


class GameEvent(BaseModel):
    type: Literal["apple", "move"]
    by: Literal["human", "engine"]
    vertex: Optional[int] = None
    target: Optional[int] = None
    kind: Optional[str] = None
    source: Optional[str] = None


class MoveRequest(BaseModel):
    target: int


class AppleRequest(BaseModel):
    vertex: int


class TurnResponse(BaseModel):
    events: list[GameEvent]
    state: SessionView


class HintResponse(BaseModel):
    vertex: int
    source: str


class LibraryEntry(BaseModel):
    name: str
    description: str
    graph: GraphPayload
