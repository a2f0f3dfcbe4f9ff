import pytest
from fastapi.testclient import TestClient

from snakegraph.engine import apply_move, new_game, place_apple, replay_trace
from snakegraph.graph import Graph, cycle_graph, path_graph
from snakegraph.graph_io import from_json_doc, to_json_doc
from snakegraph.service import create_app

from conftest import bowtie


@pytest.fixture()
def client():
    return TestClient(create_app())


def doc(g: Graph) -> dict:
    return to_json_doc(g)


class TestBatchEndpoints:
    def test_health(self, client):
        r = client.get("/api/v1/health")
        assert r.status_code == 200 and r.json()["status"] == "ok"

    def test_solve(self, client):
        r = client.post("/api/v1/solve", json={"graph": doc(bowtie())})
        body = r.json()
        assert body["winnable"] is True and body["witness"] is None
        r = client.post("/api/v1/solve", json={"graph": doc(path_graph(3))})
        body = r.json()
        assert body["winnable"] is False
        assert body["witness"] == {"first_apple": 0, "second_apple": 2}

    def test_solve_ceiling(self, client):
        r = client.post("/api/v1/solve", json={"graph": doc(bowtie()),
                                               "max_states": 3})
        assert r.status_code == 409
        assert r.json()["detail"]["error"] == "ceiling-exceeded"

    def test_classify(self, client):
        k24 = Graph(6, [(0, 2), (0, 3), (0, 4), (0, 5),
                        (1, 2), (1, 3), (1, 4), (1, 5)])
        r = client.post("/api/v1/classify", json={"graph": doc(k24)})
        body = r.json()
        assert body["verdict"] == "NotWinnable"
        assert body["reason"] == "BipartiteImbalance"

    def test_invalid_graph_rejected(self, client):
        r = client.post("/api/v1/classify",
                        json={"graph": {"vertices": [0, 1],
                                        "edges": [[0, 7]]}})
        assert r.status_code == 400

    def test_reduce_and_verify(self, client):
        from snakegraph.graph import rectangular_grid
        r = client.post("/api/v1/reduce",
                        json={"graph": doc(rectangular_grid(2, 2)),
                              "verify": True})
        body = r.json()
        assert body["reduced"] and body["report"]["passed"]
        assert body["gprime"]["coords"] is not None

    def test_strategy_check(self, client):
        from snakegraph.graph import build_theta
        r = client.post("/api/v1/strategy-check",
                        json={"graph": doc(build_theta(4, 2, 2)),
                              "policy": "theta-snake"})
        body = r.json()
        assert body["valid"] and body["role"] == "snake"

    def test_enumerate_cross_check(self, client):
        r = client.post("/api/v1/enumerate", json={"n": 4,
                                                   "cross_check": True})
        body = r.json()
        assert body["graphs"] == 6 and body["disagreements"] == []

    def test_library(self, client):
        r = client.get("/api/v1/library")
        names = [e["name"] for e in r.json()]
        assert "bowtie" in names and "theta-3-4-4" in names


class TestSessions:
    def test_human_snake_flow_c4(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(cycle_graph(4)),
                              "human_role": "snake"})
        state = r.json()["state"]
        sid = state["session_id"]
        assert state["turn"] == "human-snake"
        assert len(state["body"]) == 1 and state["apple"] is not None
        # play to the win with hints
        for _ in range(20):
            state = client.get(f"/api/v1/sessions/{sid}").json()
            if state["turn"] != "human-snake":
                break
            hint = client.get(f"/api/v1/sessions/{sid}/hint").json()
            assert hint["source"] == "solver"
            r = client.post(f"/api/v1/sessions/{sid}/move",
                            json={"target": hint["vertex"]})
            state = r.json()["state"]
            if state["status"]["outcome"] != "ongoing":
                break
        assert state["status"]["outcome"] == "snake_wins"
        assert state["length"] == 4

    def test_human_placer_flow_p3(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(path_graph(3)),
                              "human_role": "placer"})
        state = r.json()["state"]
        sid = state["session_id"]
        assert state["turn"] == "human-placer"
        # a0 on the middle, a1 on a leaf: the engine snake eats it, and the
        # final apple behind its neck leaves it stuck
        client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 1})
        r = client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 0})
        state = r.json()["state"]
        assert state["body"] == [0, 1]
        assert state["turn"] == "human-placer"
        r = client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 2})
        state = r.json()["state"]
        assert state["status"]["outcome"] == "snake_loses"
        assert state["status"]["loss_reason"] == "stuck"

    def test_illegal_move_409_names_rule(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(cycle_graph(5)),
                              "human_role": "snake"})
        state = r.json()["state"]
        sid = state["session_id"]
        head = state["body"][0]
        bad = next(v for v in range(5)
                   if v != head
                   and v not in [m["target"]
                                 for m in state["legal_moves"]])
        r = client.post(f"/api/v1/sessions/{sid}/move", json={"target": bad})
        assert r.status_code == 409
        detail = r.json()["detail"]
        assert detail["error"] in ("illegal-move", "out-of-turn")
        if detail["error"] == "illegal-move":
            assert "rule" in detail

    def test_placement_on_occupied_409(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(path_graph(3)),
                              "human_role": "placer"})
        sid = r.json()["state"]["session_id"]
        client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 1})
        r = client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 1})
        assert r.status_code == 409
        assert r.json()["detail"]["rule"] \
            == "apple-must-be-on-unoccupied-vertex"

    def test_out_of_turn_409(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(cycle_graph(4)),
                              "human_role": "snake"})
        sid = r.json()["state"]["session_id"]
        r = client.post(f"/api/v1/sessions/{sid}/apple", json={"vertex": 2})
        assert r.status_code == 409

    def test_unknown_session_404(self, client):
        assert client.get("/api/v1/sessions/zzz").status_code == 404

    def test_engine_snake_beats_optimal_placer_on_bowtie(self, client):
        # the bowtie is snake-winnable, so even hint-guided (solver-optimal)
        # placements cannot save the human placer
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(bowtie()),
                              "human_role": "placer"})
        state = r.json()["state"]
        sid = state["session_id"]
        for _ in range(10):
            if state["status"]["outcome"] != "ongoing":
                break
            assert state["turn"] == "human-placer"
            hint = client.get(f"/api/v1/sessions/{sid}/hint").json()
            state = client.post(f"/api/v1/sessions/{sid}/apple",
                                json={"vertex": hint["vertex"]}).json()["state"]
        assert state["status"]["outcome"] == "snake_wins"
        assert state["length"] == 5

    def test_snake_repetition_loss_surfaces(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(cycle_graph(4)),
                              "human_role": "snake"})
        state = r.json()["state"]
        sid = state["session_id"]
        head = state["body"][0]
        apple = state["apple"]
        g = cycle_graph(4)
        free_step = next(t for t in g.adj[head] if t != apple)
        client.post(f"/api/v1/sessions/{sid}/move",
                    json={"target": free_step})
        state = client.post(f"/api/v1/sessions/{sid}/move",
                            json={"target": head}).json()["state"]
        assert state["status"]["outcome"] == "snake_loses"
        assert state["status"]["loss_reason"] == "repetition"

    def test_tiny_graph_rejected(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": {"vertices": [0, 1],
                                        "edges": [[0, 1]]},
                              "human_role": "snake"})
        assert r.status_code == 400

    def test_trace_replays_to_same_outcome(self, client):
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(cycle_graph(4)),
                              "human_role": "snake"})
        state = r.json()["state"]
        sid = state["session_id"]
        while state["status"]["outcome"] == "ongoing":
            hint = client.get(f"/api/v1/sessions/{sid}/hint").json()
            state = client.post(f"/api/v1/sessions/{sid}/move",
                                json={"target": hint["vertex"]}).json()["state"]
        trace = client.get(f"/api/v1/sessions/{sid}/trace").json()
        result = replay_trace(from_json_doc(trace["graph"]), trace)
        assert result.status.outcome.value == state["status"]["outcome"]


class TestBisimulation:
    def test_api_state_equals_engine_state(self, client):
        """Apply the same moves through the API and directly through the
        rules engine; the states must match after every step."""
        g = cycle_graph(5)
        r = client.post("/api/v1/sessions",
                        json={"graph": doc(g), "human_role": "snake"})
        payload = r.json()
        state = payload["state"]
        sid = state["session_id"]
        # mirror the engine placer's opening
        opening = [e for e in payload["events"] if e["type"] == "apple"]
        mirror = new_game(g, opening[0]["vertex"])
        mirror = place_apple(g, mirror, opening[1]["vertex"])
        assert state["body"] == list(mirror.body)
        assert state["apple"] == mirror.apple
        for _ in range(12):
            state = client.get(f"/api/v1/sessions/{sid}").json()
            if state["turn"] != "human-snake":
                break
            target = state["legal_moves"][0]["target"]
            payload = client.post(f"/api/v1/sessions/{sid}/move",
                                  json={"target": target}).json()
            mirror = apply_move(g, mirror, target)
            for event in payload["events"]:
                if event["by"] == "engine" and event["type"] == "apple":
                    mirror = place_apple(g, mirror, event["vertex"])
            state = payload["state"]
            assert state["body"] == list(mirror.body)
            assert state["apple"] == mirror.apple
            if state["status"]["outcome"] != "ongoing":
                break
