"""Graph file formats.

Two formats are supported and both round-trip bit-exactly through save/load
when the file is in canonical form (dense integer ids, sorted):

* edge-list text: one "u v" pair per line, optional "# n=<count>" header
  (needed to preserve isolated vertices), "#" comments allowed;
* JSON: {"vertices": [...], "edges": [[u, v], ...], "coords": [[x, y], ...]?}.

Loaders accept arbitrary vertex labels and map them onto dense ids 0..n-1
(numeric labels sort numerically, anything else lexicographically). Savers
always emit canonical form.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from .graph import Graph, GraphError


def _dense_map(labels: list) -> dict:
    if all(isinstance(x, int) or (isinstance(x, str) and x.lstrip("-").isdigit())
           for x in labels):
        ordered = sorted(labels, key=int)
    else:
        ordered = sorted(labels, key=str)
    return {lab: i for i, lab in enumerate(ordered)}


def to_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n: Optional[int] = None
    raw_edges: list[tuple[str, str]] = []
    labels: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                try:
                    n = int(body[2:])
                except ValueError:
                    raise GraphError(f"line {lineno}: bad vertex count header")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        raw_edges.append((parts[0], parts[1]))
        labels.update(parts)
    if n is not None:
        extra = [x for x in labels
                 if not (x.lstrip("-").isdigit() and 0 <= int(x) < n)]
        if extra:
            raise GraphError(
                f"labels {extra} do not fit the declared n={n}; drop the "
                "header to use arbitrary labels")
        mapping = {x: int(x) for x in labels}
        count = n
    else:
        mapping = _dense_map(sorted(labels))
        count = len(mapping)
    if count == 0:
        raise GraphError("empty graph file")
    return Graph(count, [(mapping[a], mapping[b]) for a, b in raw_edges])


def to_json_doc(g: Graph) -> dict:
    doc: dict = {
        "vertices": list(range(g.n)),
        "edges": [[u, v] for u, v in g.edges],
    }
    if g.coords is not None:
        doc["coords"] = [[x, y] for x, y in g.coords]
    return doc


def from_json_doc(doc: dict) -> Graph:
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph JSON needs 'vertices' and 'edges'")
    labels = list(doc["vertices"])
    if len(set(map(str, labels))) != len(labels):
        raise GraphError("duplicate vertex labels")
    mapping = _dense_map(labels)
    edges = []
    for e in doc["edges"]:
        if len(e) != 2 or e[0] not in mapping or e[1] not in mapping:
            raise GraphError(f"bad edge entry {e!r}")
        edges.append((mapping[e[0]], mapping[e[1]]))
    coords = None
    if doc.get("coords") is not None:
        raw = doc["coords"]
        if len(raw) != len(labels):
            raise GraphError("coords must align with vertices")
        coords = [None] * len(labels)
        for lab, c in zip(labels, raw):
            coords[mapping[lab]] = (int(c[0]), int(c[1]))
    return Graph(len(labels), edges, coords=coords)


def to_json(g: Graph) -> str:
    return json.dumps(to_json_doc(g), separators=(", ", ": ")) + "\n"


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphError(f"invalid JSON: {e}") from e
    return from_json_doc(doc)


def load_graph(path: str) -> Graph:
    """Load by extension: .json as the JSON document, anything else as an
    edge list."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return from_json(text)
    return from_edge_list(text)


def save_graph(g: Graph, path: str) -> None:
    text = to_json(g) if path.endswith(".json") else to_edge_list(g)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def graph_content_hash(g: Graph) -> str:
    """Stable content hash of the canonical JSON form (used as a cache key)."""
    return hashlib.sha256(to_json(g).encode("utf-8")).hexdigest()
