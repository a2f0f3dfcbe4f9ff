#!/usr/bin/env python3
"""Record golden API fixtures for the frontend tests.

Drives the real service in-process and captures every request/response pair
a scripted UI session produces, plus a corpus of random games. The frontend
test suite replays these through the view model and diffs states, so the
client provably renders exactly what the server said without needing a live
server in CI.

Run from frontend/: python3 scripts/record_fixtures.py
"""

import asyncio
import json
import pathlib
import random

import httpx

from snakegraph.service import create_app

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "test" / "fixtures"


class Recorder:
    def __init__(self, client: httpx.AsyncClient):
        self.client = client
        self.steps = []
        self.session_id = None

    async def do(self, action: dict):
        kind = action["kind"]
        if kind == "create":
            r = await self.client.post("/api/v1/sessions", json={
                "graph": action["graph"],
                "human_role": action["human_role"]})
        elif kind == "move":
            r = await self.client.post(
                f"/api/v1/sessions/{self.session_id}/move",
                json={"target": action["target"]})
        elif kind == "place":
            r = await self.client.post(
                f"/api/v1/sessions/{self.session_id}/apple",
                json={"vertex": action["vertex"]})
        elif kind == "hint":
            r = await self.client.get(
                f"/api/v1/sessions/{self.session_id}/hint")
        else:
            raise ValueError(kind)
        if r.status_code >= 400:
            self.steps.append({"action": action,
                               "error": {"status": r.status_code,
                                         "detail": r.json()["detail"]}})
            return None
        payload = r.json()
        self.steps.append({"action": action, "response": payload})
        if kind == "create":
            self.session_id = payload["state"]["session_id"]
        return payload

    async def trace(self):
        r = await self.client.get(
            f"/api/v1/sessions/{self.session_id}/trace")
        return r.json()


async def library_graph(client, name):
    r = await client.get("/api/v1/library")
    return next(e["graph"] for e in r.json() if e["name"] == name)


async def scripted_snake_game(client, graph, *, illegal_probe=None):
    """Human snake plays hint-driven (optimal) moves until the game ends."""
    rec = Recorder(client)
    payload = await rec.do({"kind": "create", "graph": graph,
                            "human_role": "snake"})
    state = payload["state"]
    probed = False
    while state["status"]["outcome"] == "ongoing":
        if state["turn"] != "human-snake":
            raise RuntimeError("engine failed to move")
        if illegal_probe is not None and not probed:
            legal = {m["target"] for m in state["legal_moves"]}
            bad = next(v for v in state["graph"]["vertices"]
                       if v not in legal and v != state["body"][0])
            await rec.do({"kind": "move", "target": bad})
            probed = True
        hint = await rec.do({"kind": "hint"})
        payload = await rec.do({"kind": "move", "target": hint["vertex"]})
        state = payload["state"]
    return {"steps": rec.steps, "final_trace": await rec.trace()}


async def scripted_placer_game(client, graph, placements):
    rec = Recorder(client)
    payload = await rec.do({"kind": "create", "graph": graph,
                            "human_role": "placer"})
    state = payload["state"]
    for vertex in placements:
        if state["status"]["outcome"] != "ongoing":
            break
        payload = await rec.do({"kind": "place", "vertex": vertex})
        if payload is None:
            continue
        state = payload["state"]
    return {"steps": rec.steps, "final_trace": await rec.trace()}


async def random_game(client, graph, human_role, rng):
    rec = Recorder(client)
    payload = await rec.do({"kind": "create", "graph": graph,
                            "human_role": human_role})
    state = payload["state"]
    for _ in range(200):
        if state["status"]["outcome"] != "ongoing":
            break
        if state["turn"] == "human-snake":
            targets = [m["target"] for m in state["legal_moves"]]
            if not targets:
                break
            payload = await rec.do({"kind": "move",
                                    "target": rng.choice(targets)})
        elif state["turn"] == "human-placer":
            occupied = set(state["body"])
            free = [v for v in state["graph"]["vertices"]
                    if v not in occupied]
            payload = await rec.do({"kind": "place",
                                    "vertex": rng.choice(free)})
        else:
            raise RuntimeError(f"unexpected turn {state['turn']}")
        state = payload["state"]
    return {"graph_name": None, "human_role": human_role, "steps": rec.steps}


async def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(transport=transport,
                                 base_url="http://svc",
                                 timeout=None) as client:
        c4 = await library_graph(client, "cycle-4")
        p3 = await library_graph(client, "path-3")
        bowtie = await library_graph(client, "bowtie")

        scenarios = {
            "c4_snake_win": await scripted_snake_game(
                client, c4, illegal_probe=True),
            "p3_placer_win": await scripted_placer_game(
                client, p3, [1, 0, 2]),
            "bowtie_snake_win": await scripted_snake_game(client, bowtie),
        }
        for name, data in scenarios.items():
            path = OUT_DIR / f"{name}.json"
            path.write_text(json.dumps(data, indent=1))
            print(f"wrote {path}")

        rng = random.Random(20260808)
        games = []
        pool = [(c4, "snake"), (c4, "placer"), (p3, "placer"),
                (bowtie, "snake"), (bowtie, "placer")]
        for i in range(100):
            graph, role = pool[i % len(pool)]
            games.append(await random_game(client, graph, role, rng))
        path = OUT_DIR / "random_games.json"
        path.write_text(json.dumps(games, indent=1))
        print(f"wrote {path} ({len(games)} games)")


if __name__ == "__main__":
    asyncio.run(main())
