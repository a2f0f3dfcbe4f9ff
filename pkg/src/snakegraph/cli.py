"""Command-line interface.

The CLI is a thin client of the HTTP service: every command (except
play-serve) turns its arguments into the corresponding API request and
prints the JSON response. By default the request runs against an in-process
application instance, so no server is needed; --server routes the same
request to a running instance instead.

Exit codes: 0 success; 2 input error; 3 search ceiling exceeded; 4 a check
command found a negative verdict (invalid strategy, cross-check
disagreement, failed reduction verification).
"""

from __future__ import annotations

import argparse
import asyncio
import hashlib
import json
import sys
from typing import Optional

import httpx

from .graph_io import load_graph, save_graph, to_json_doc, from_json_doc
from .graph import GraphError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CEILING = 3
EXIT_CHECK_FAILED = 4

CACHE_FORMAT = "snakegraph-solve-cache/1"


class ApiClient:
    """Requests against a remote base URL or the in-process app."""

    def __init__(self, server: Optional[str] = None):
        self.server = server.rstrip("/") if server else None

    def request(self, method: str, path: str, body: Optional[dict] = None
                ) -> tuple[int, dict]:
        if self.server is not None:
            with httpx.Client(base_url=self.server, timeout=None) as client:
                r = client.request(method, path, json=body)
                return r.status_code, r.json()
        from .service import create_app

        async def go():
            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://snakegraph",
                                         timeout=None) as client:
                r = await client.request(method, path, json=body)
                return r.status_code, r.json()

        return asyncio.run(go())


def _read_graph_doc(path: str) -> dict:
    return to_json_doc(load_graph(path))


def _fail(payload: dict) -> int:
    print(json.dumps(payload, indent=2))
    detail = payload.get("detail", {})
    if isinstance(detail, dict) and detail.get("error") == "ceiling-exceeded":
        return EXIT_CEILING
    return EXIT_INPUT


def _graph_hash(doc: dict) -> str:
    blob = json.dumps(doc, separators=(", ", ": ")) + "\n"
    return hashlib.sha256(blob.encode()).hexdigest()


def cmd_solve(args, client: ApiClient) -> int:
    doc = _read_graph_doc(args.graph)
    cache = None
    key = _graph_hash(doc)
    if args.cache:
        try:
            with open(args.cache) as fh:
                cache = json.load(fh)
            if cache.get("format") != CACHE_FORMAT:
                print(json.dumps({"error": "unknown cache format"}))
                return EXIT_INPUT
        except FileNotFoundError:
            cache = {"format": CACHE_FORMAT, "entries": {}}
        hit = cache["entries"].get(key)
        if hit is not None:
            hit = dict(hit)
            hit["cached"] = True
            print(json.dumps(hit, indent=2))
            return EXIT_OK
    body = {"graph": doc}
    if args.max_states:
        body["max_states"] = args.max_states
    code, payload = client.request("POST", "/api/v1/solve", body)
    if code != 200:
        return _fail(payload)
    print(json.dumps(payload, indent=2))
    if args.cache:
        cache["entries"][key] = payload
        with open(args.cache, "w") as fh:
            json.dump(cache, fh, indent=2)
    return EXIT_OK


def cmd_classify(args, client: ApiClient) -> int:
    code, payload = client.request("POST", "/api/v1/classify",
                                   {"graph": _read_graph_doc(args.graph)})
    if code != 200:
        return _fail(payload)
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_reduce(args, client: ApiClient) -> int:
    body = {"graph": _read_graph_doc(args.in_path), "verify": args.report
            is not None, "check_long_cycles": args.check_long_cycles}
    code, payload = client.request("POST", "/api/v1/reduce", body)
    if code != 200:
        return _fail(payload)
    summary = {k: payload[k] for k in ("reduced", "short_circuit")
               if payload.get(k) is not None}
    if payload["reduced"] and args.out:
        save_graph(from_json_doc(payload["gprime"]), args.out)
        summary["out"] = args.out
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({"attachment": payload.get("attachment"),
                       "report": payload.get("report")}, fh, indent=2)
        summary["report"] = args.report
    print(json.dumps(summary, indent=2))
    if payload["reduced"] and args.report \
            and not (payload.get("report") or {}).get("passed", False):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_strategy_check(args, client: ApiClient) -> int:
    body = {"graph": _read_graph_doc(args.graph), "policy": args.policy}
    if args.max_states:
        body["max_states"] = args.max_states
    code, payload = client.request("POST", "/api/v1/strategy-check", body)
    if code != 200:
        return _fail(payload)
    print(json.dumps(payload, indent=2))
    return EXIT_OK if payload["valid"] else EXIT_CHECK_FAILED


def cmd_enumerate(args, client: ApiClient) -> int:
    body = {"n": args.n, "cross_check": args.cross_check}
    code, payload = client.request("POST", "/api/v1/enumerate", body)
    if code != 200:
        return _fail(payload)
    print(json.dumps(payload, indent=2))
    if args.cross_check and payload["disagreements"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_play_serve(args, client: ApiClient) -> int:
    import uvicorn
    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snakegraph",
        description="Snake on a graph: solve, classify, reduce, validate "
                    "strategies, and serve interactive play.")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default is "
                             "in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact winnability verdict for a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-states", type=int, default=None)
    p.add_argument("--cache", default=None,
                   help="JSON verdict cache keyed by graph content hash")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("classify",
                       help="solver-free structural classification")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("reduce",
                       help="attach the hardness gadget to a grid graph")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--report", default=None,
                   help="write the attachment and verification report here")
    p.add_argument("--check-long-cycles", action="store_true")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("strategy-check",
                       help="validate a named policy against an exhaustive "
                            "adversary")
    p.add_argument("--graph", required=True)
    p.add_argument("--policy", required=True)
    p.add_argument("--max-states", type=int, default=None)
    p.set_defaults(fn=cmd_strategy_check)

    p = sub.add_parser("enumerate",
                       help="enumerate small connected graphs; optionally "
                            "cross-check classify against the solver")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("play-serve", help="run the interactive play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8729)
    p.set_defaults(fn=cmd_play_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    client = ApiClient(args.server)
    try:
        return args.fn(args, client)
    except GraphError as e:
        print(json.dumps({"error": "invalid-input", "message": str(e)}))
        return EXIT_INPUT
    except FileNotFoundError as e:
        print(json.dumps({"error": "invalid-input", "message": str(e)}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
