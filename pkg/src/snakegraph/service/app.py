"""HTTP/JSON service: batch analysis endpoints plus interactive sessions.

All endpoints live under the versioned prefix /api/v1. Error shape:
{"detail": {"error": <code>, "message": ..., "rule": ...?}} with
400 invalid input, 404 unknown session, 409 illegal or out-of-turn actions
and exceeded search ceilings.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .. import __version__
from ..classify import classify
from ..graph import (Graph, GraphError, SearchCeilingExceeded, build_theta,
                     complete_bipartite, cycle_graph, path_graph,
                     rectangular_grid)
from ..graph_io import to_json_doc
from ..reduction import reduce_grid, verify_gadget
from ..search import enumerate_connected_graphs
from ..solver import Solver
from ..strategies import (PLACER_POLICY_FACTORIES, PolicyInapplicableError,
                          SNAKE_POLICY_FACTORIES, validate_placer_policy,
                          validate_snake_policy)
from . import schemas
from .sessions import SessionError, SessionStore


def _error(status: int, code: str, message: str, rule: str | None = None):
    detail = {"error": code, "message": message}
    if rule:
        detail["rule"] = rule
    return HTTPException(status_code=status, detail=detail)


def _session_http_error(e: SessionError) -> HTTPException:
    if e.code == "unknown-session":
        return _error(404, e.code, str(e))
    if e.code in ("illegal-move", "out-of-turn", "game-over"):
        return _error(409, e.code, str(e), rule=e.rule)
    return _error(409, e.code, str(e))


def _load_graph(payload: schemas.GraphPayload) -> Graph:
    try:
        return payload.to_graph()
    except GraphError as e:
        raise _error(400, "invalid-input", str(e))


def create_app() -> FastAPI:
    app = FastAPI(title="snakegraph", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore()
    app.state.sessions = store

    @app.get("/api/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/v1/solve", response_model=schemas.SolveResponse)
    def solve(req: schemas.SolveRequest):
        g = _load_graph(req.graph)
        solver = Solver(g, max_states=req.max_states)
        t0 = time.perf_counter()
        try:
            ok, witness = solver.winnable()
        except SearchCeilingExceeded as e:
            raise _error(409, "ceiling-exceeded", str(e))
        elapsed = (time.perf_counter() - t0) * 1000.0
        return schemas.SolveResponse(
            winnable=ok,
            witness=schemas.WitnessPair(first_apple=witness[0],
                                        second_apple=witness[1])
            if witness else None,
            nodes=solver.nodes, elapsed_ms=round(elapsed, 3))

    @app.post("/api/v1/classify", response_model=schemas.ClassifyResponse)
    def classify_endpoint(req: schemas.ClassifyRequest):
        g = _load_graph(req.graph)
        try:
            c = classify(g)
        except SearchCeilingExceeded as e:
            raise _error(409, "ceiling-exceeded", str(e))
        doc = c.to_json_doc()
        return schemas.ClassifyResponse(**doc)

    @app.post("/api/v1/reduce", response_model=schemas.ReduceResponse)
    def reduce_endpoint(req: schemas.ReduceRequest):
        g = _load_graph(req.graph)
        try:
            result = reduce_grid(g)
        except GraphError as e:
            raise _error(400, "invalid-input", str(e))
        if not result.reduced:
            return schemas.ReduceResponse(
                reduced=False, short_circuit=result.short_circuit)
        report = None
        if req.verify:
            try:
                report = verify_gadget(g, result.gprime, result.attachment,
                                       check_long_cycles=req.check_long_cycles)
            except SearchCeilingExceeded as e:
                raise _error(409, "ceiling-exceeded", str(e))
        return schemas.ReduceResponse(
            reduced=True,
            gprime=schemas.GraphPayload.from_graph(result.gprime),
            attachment=result.attachment.to_json_doc(),
            report=report)

    @app.post("/api/v1/strategy-check",
              response_model=schemas.StrategyCheckResponse)
    def strategy_check(req: schemas.StrategyCheckRequest):
        g = _load_graph(req.graph)
        name = req.policy
        if name in SNAKE_POLICY_FACTORIES:
            role, factory, validator = \
                "snake", SNAKE_POLICY_FACTORIES[name], validate_snake_policy
        elif name in PLACER_POLICY_FACTORIES:
            role, factory, validator = \
                "placer", PLACER_POLICY_FACTORIES[name], validate_placer_policy
        else:
            known = sorted(SNAKE_POLICY_FACTORIES) + sorted(
                PLACER_POLICY_FACTORIES)
            raise _error(400, "invalid-input",
                         f"unknown policy {name!r}; known: {known}")
        try:
            policy = factory(g)
        except PolicyInapplicableError as e:
            return schemas.StrategyCheckResponse(
                policy=name, role=role, applicable=False, valid=False,
                failure=str(e))
        except SearchCeilingExceeded as e:
            raise _error(409, "ceiling-exceeded", str(e))
        try:
            report = validator(g, policy, max_states=req.max_states)
        except SearchCeilingExceeded as e:
            raise _error(409, "ceiling-exceeded", str(e))
        return schemas.StrategyCheckResponse(
            policy=name, role=role, applicable=True, valid=report.valid,
            leaves=report.leaves, depth=report.depth, failure=report.failure)

    @app.post("/api/v1/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_endpoint(req: schemas.EnumerateRequest):
        decided = unknown = count = 0
        disagreements = []
        try:
            for g in enumerate_connected_graphs(req.n,
                                                up_to_iso=req.up_to_iso):
                count += 1
                c = classify(g)
                if c.verdict.value == "Unknown":
                    unknown += 1
                else:
                    decided += 1
                if req.cross_check:
                    ok, _ = Solver(g, max_states=req.max_states).winnable()
                    verdict_matches = (
                        c.verdict.value == "Unknown"
                        or (c.verdict.value == "Winnable") == ok)
                    if not verdict_matches:
                        disagreements.append(schemas.Disagreement(
                            edges=[[u, v] for u, v in g.edges],
                            classify_verdict=c.verdict.value,
                            solver_winnable=ok))
        except SearchCeilingExceeded as e:
            raise _error(409, "ceiling-exceeded", str(e))
        return schemas.EnumerateResponse(
            n=req.n, graphs=count, decided=decided, unknown=unknown,
            disagreements=disagreements)

    # -- sessions ------------------------------------------------------------

    @app.post("/api/v1/sessions", response_model=schemas.TurnResponse)
    def create_session(req: schemas.CreateSessionRequest):
        g = _load_graph(req.graph)
        if g.n < 3:
            raise _error(400, "invalid-input",
                         "the game needs a graph with at least 3 vertices")
        session = store.create(g, req.human_role, req.engine_max_states)
        with session.lock:
            try:
                events = session.engine_drive()
            except SessionError as e:
                raise _session_http_error(e)
            return schemas.TurnResponse(
                events=[schemas.GameEvent(**e) for e in events],
                state=schemas.SessionView(**session.view()))

    def _get_session(session_id: str):
        try:
            return store.get(session_id)
        except SessionError as e:
            raise _session_http_error(e)

    @app.get("/api/v1/sessions/{session_id}",
             response_model=schemas.SessionView)
    def get_state(session_id: str):
        session = _get_session(session_id)
        with session.lock:
            return schemas.SessionView(**session.view())

    @app.post("/api/v1/sessions/{session_id}/move",
              response_model=schemas.TurnResponse)
    def post_move(session_id: str, req: schemas.MoveRequest):
        session = _get_session(session_id)
        with session.lock:
            try:
                events = session.human_move(req.target)
            except SessionError as e:
                raise _session_http_error(e)
            return schemas.TurnResponse(
                events=[schemas.GameEvent(**e) for e in events],
                state=schemas.SessionView(**session.view()))

    @app.post("/api/v1/sessions/{session_id}/apple",
              response_model=schemas.TurnResponse)
    def post_apple(session_id: str, req: schemas.AppleRequest):
        session = _get_session(session_id)
        with session.lock:
            try:
                events = session.human_place(req.vertex)
            except SessionError as e:
                raise _session_http_error(e)
            return schemas.TurnResponse(
                events=[schemas.GameEvent(**e) for e in events],
                state=schemas.SessionView(**session.view()))

    @app.get("/api/v1/sessions/{session_id}/hint",
             response_model=schemas.HintResponse)
    def get_hint(session_id: str):
        session = _get_session(session_id)
        with session.lock:
            try:
                vertex, source = session.hint()
            except SessionError as e:
                raise _session_http_error(e)
            except SearchCeilingExceeded as e:
                raise _error(409, "ceiling-exceeded", str(e))
            return schemas.HintResponse(vertex=vertex, source=source)

    @app.get("/api/v1/sessions/{session_id}/trace")
    def get_trace(session_id: str):
        session = _get_session(session_id)
        with session.lock:
            return session.trace()

    @app.get("/api/v1/library",
             response_model=list[schemas.LibraryEntry])
    def library():
        return [schemas.LibraryEntry(
            name=name, description=desc,
            graph=schemas.GraphPayload(**to_json_doc(g)))
            for name, desc, g in _graph_library()]

    return app


def _graph_library() -> list[tuple[str, str, Graph]]:
    bowtie = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    double_k4 = Graph(7, [(a, b) for part in ([0, 1, 2, 3], [3, 4, 5, 6])
                          for i, a in enumerate(part) for b in part[i + 1:]])
    k23_minus = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)])
    two_c4 = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0),
                       (0, 4), (4, 5), (5, 6), (6, 0)])
    reduction_2x2 = reduce_grid(rectangular_grid(2, 2)).gprime
    return [
        ("cycle-4", "4-cycle: hamiltonian, snake wins", cycle_graph(4)),
        ("cycle-6", "6-cycle: hamiltonian, snake wins", cycle_graph(6)),
        ("path-3", "3-path: leaf vertices doom the snake", path_graph(3)),
        ("bowtie", "two triangles sharing a vertex: snake wins", bowtie),
        ("theta-2-2-2", "complete bipartite K_{2,3}: snake wins",
         build_theta(2, 2, 2)),
        ("theta-4-2-2", "theta with a long path: snake wins",
         build_theta(4, 2, 2)),
        ("theta-3-4-4", "girth-7 theta: the placer wins",
         build_theta(3, 4, 4)),
        ("grid-2x3", "2x3 rectangular grid: hamiltonian",
         rectangular_grid(3, 2)),
        ("grid-3x3", "3x3 rectangular grid: odd, snake wins via the "
         "spanning theta", rectangular_grid(3, 3)),
        ("double-k4", "two K4 sharing a vertex: snake wins", double_k4),
        ("k23-minus-edge", "odd bipartite with no spanning theta: the "
         "placer wins", k23_minus),
        ("two-c4-cut", "two 4-cycles sharing a vertex: the placer wins",
         two_c4),
        ("star-k13", "star: three components behind the center",
         complete_bipartite(1, 3)),
        ("reduction-2x2", "gadget attached to the 2x2 grid: odd grid, "
         "snake wins iff the input was hamiltonian", reduction_2x2),
    ]
