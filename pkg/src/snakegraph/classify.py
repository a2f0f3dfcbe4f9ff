"""Solver-free winnability classification.

``classify`` applies the known structural rules in a fixed, documented order
and returns the first decisive verdict with a machine-checkable certificate;
graphs no rule covers come back Unknown (even-sized bipartite graphs and
2-connected even graphs with small girth are deliberately left open rather
than guessed).

Rule order:

1. degree-one vertex               -> NotWinnable
2. bipartite with part imbalance>1 -> NotWinnable
3. cut vertex                      -> decisive both ways (the only winnable
   shape is two equal complete sides sharing the cut vertex)
4. odd bipartite                   -> decisive both ways (winnable iff a
   spanning theta with two 2-paths exists)
5. girth above 6 and no ham cycle  -> NotWinnable
6. hamiltonian cycle               -> Winnable; no hamiltonian path
                                      -> NotWinnable
7. spanning theta with two 2-paths -> Winnable (any graph)

Any decisive subset must agree with the exact solver, so the fixed order
only pins down which reason tag is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph import (Graph, GraphError, bipartition,
                    components_after_removal, cut_vertices, girth,
                    is_connected, shortest_cycle)
from .search import (ThetaCertificate, check_theta_certificate,
                     find_spanning_theta, hamiltonian_cycle,
                     hamiltonian_path)


class Verdict(str, Enum):
    WINNABLE = "Winnable"
    NOT_WINNABLE = "NotWinnable"
    UNKNOWN = "Unknown"


class Reason(str, Enum):
    HAMILTONIAN_CYCLE = "HamiltonianCycle"
    THETA_ODD_BIPARTITE = "ThetaOddBipartite"
    CUT_VERTEX_COMPLETE = "CutVertexComplete"
    NO_HAM_PATH = "NoHamPath"
    BIPARTITE_IMBALANCE = "BipartiteImbalance"
    DEGREE_ONE = "DegreeOne"
    THREE_PLUS_COMPONENTS = "ThreePlusComponents"
    GIRTH_GT6_NON_HAM = "GirthGT6NonHam"
    ODD_BIPARTITE_NO_THETA = "OddBipartiteNoTheta"
    CUT_VERTEX_OBSTRUCTION = "CutVertexObstruction"
    # Reserved: the circumference argument is a placer tactic used inside
    # strategies, not a standalone graph classifier; classify never emits it.
    CIRCUMFERENCE_ARGUMENT_NA = "CircumferenceArgument-NA"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: Optional[Reason]
    certificate: Optional[dict]

    def to_json_doc(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reason": self.reason.value if self.reason else None,
            "certificate": self.certificate,
        }


def _theta_cert_doc(cert: ThetaCertificate) -> dict:
    return {
        "junctions": [cert.u, cert.v],
        "middles": [cert.x, cert.y],
        "long_path": list(cert.long_path),
    }


def theta_cert_from_doc(doc: dict) -> ThetaCertificate:
    u, v = doc["junctions"]
    x, y = doc["middles"]
    return ThetaCertificate(u=u, v=v, x=x, y=y,
                            long_path=tuple(doc["long_path"]))


def classify(g: Graph) -> Classification:
    """First decisive rule's verdict, in the documented order.

    Expects a connected graph with at least 3 vertices (the game's own
    domain); anything else is rejected rather than misclassified.
    """
    if g.n < 3:
        raise GraphError("classification needs at least 3 vertices")
    if not is_connected(g):
        raise GraphError("classification expects a connected graph")
    for v in range(g.n):
        if g.degree(v) == 1:
            return Classification(Verdict.NOT_WINNABLE, Reason.DEGREE_ONE,
                                  {"vertex": v})
    parts = bipartition(g)
    if parts is not None and abs(len(parts[0]) - len(parts[1])) > 1:
        return Classification(
            Verdict.NOT_WINNABLE, Reason.BIPARTITE_IMBALANCE,
            {"parts": [sorted(parts[0]), sorted(parts[1])]})
    cuts = cut_vertices(g)
    if cuts:
        return decide_cut_vertex(g)
    if parts is not None and g.n % 2 == 1:
        return decide_odd_bipartite(g)
    if girth(g) > 6:
        cycle = hamiltonian_cycle(g)
        if cycle is None:
            sc = shortest_cycle(g)
            return Classification(
                Verdict.NOT_WINNABLE, Reason.GIRTH_GT6_NON_HAM,
                {"girth": len(sc) if sc else None,
                 "shortest_cycle": sc})
        return Classification(Verdict.WINNABLE, Reason.HAMILTONIAN_CYCLE,
                              {"cycle": cycle})
    cycle = hamiltonian_cycle(g)
    if cycle is not None:
        return Classification(Verdict.WINNABLE, Reason.HAMILTONIAN_CYCLE,
                              {"cycle": cycle})
    if hamiltonian_path(g) is None:
        return Classification(Verdict.NOT_WINNABLE, Reason.NO_HAM_PATH, None)
    cert = find_spanning_theta(g)
    if cert is not None:
        # The two-cycle strategy wins on any graph spanned by such a theta,
        # bipartite or not; the tag names the rule family.
        return Classification(Verdict.WINNABLE, Reason.THETA_ODD_BIPARTITE,
                              _theta_cert_doc(cert))
    return Classification(Verdict.UNKNOWN, None, None)


def decide_odd_bipartite(g: Graph) -> Classification:
    """Exact decision for odd-sized bipartite graphs: winnable iff a
    spanning theta with two 2-paths exists."""
    parts = bipartition(g)
    if parts is None or g.n % 2 == 0:
        raise ValueError("decide_odd_bipartite needs an odd bipartite graph")
    cert = find_spanning_theta(g)
    if cert is not None:
        return Classification(Verdict.WINNABLE, Reason.THETA_ODD_BIPARTITE,
                              _theta_cert_doc(cert))
    return Classification(Verdict.NOT_WINNABLE,
                          Reason.ODD_BIPARTITE_NO_THETA, None)


def decide_cut_vertex(g: Graph) -> Classification:
    """Exact decision for graphs with a cut vertex.

    Winnable iff removing the cut vertex leaves exactly two components of
    equal size at least 2 whose closures are complete. The smallest cut
    vertex is inspected; if the winnable shape held for any cut vertex the
    shape's completeness forces that cut vertex to be unique, so one
    inspection decides the graph.
    """
    cuts = cut_vertices(g)
    if not cuts:
        raise ValueError("decide_cut_vertex needs a graph with a cut vertex")
    v = cuts[0]
    comps = components_after_removal(g, v)
    if len(comps) >= 3:
        return Classification(
            Verdict.NOT_WINNABLE, Reason.THREE_PLUS_COMPONENTS,
            {"cut_vertex": v, "components": comps})
    c1, c2 = comps
    if min(len(c1), len(c2)) == 1:
        lone = c1[0] if len(c1) == 1 else c2[0]
        return Classification(Verdict.NOT_WINNABLE, Reason.DEGREE_ONE,
                              {"vertex": lone})
    if len(c1) != len(c2):
        return Classification(
            Verdict.NOT_WINNABLE, Reason.CUT_VERTEX_OBSTRUCTION,
            {"kind": "size-mismatch", "cut_vertex": v,
             "sizes": sorted([len(c1), len(c2)])})
    for comp in comps:
        sub_vertices = set(comp) | {v}
        if not all(g.has_edge(a, b)
                   for a in sub_vertices for b in sub_vertices if a < b):
            return Classification(
                Verdict.NOT_WINNABLE, Reason.CUT_VERTEX_OBSTRUCTION,
                {"kind": "incomplete-side", "cut_vertex": v,
                 "side": comp})
    return Classification(
        Verdict.WINNABLE, Reason.CUT_VERTEX_COMPLETE,
        {"cut_vertex": v, "parts": comps})


def verify_certificate(g: Graph, c: Classification) -> bool:
    """Independently re-check a classification's certificate.

    Unknown verdicts and exhaustive-negative reasons carry no certificate
    and verify vacuously.
    """
    if c.certificate is None:
        return c.reason in (None, Reason.NO_HAM_PATH,
                            Reason.ODD_BIPARTITE_NO_THETA)
    cert = c.certificate
    if c.reason is Reason.HAMILTONIAN_CYCLE:
        cycle = cert["cycle"]
        closed = cycle + [cycle[0]]
        return (sorted(cycle) == list(range(g.n))
                and all(g.has_edge(a, b) for a, b in zip(closed, closed[1:])))
    if c.reason is Reason.THETA_ODD_BIPARTITE:
        try:
            check_theta_certificate(g, theta_cert_from_doc(cert))
            return True
        except Exception:
            return False
    if c.reason is Reason.DEGREE_ONE:
        return g.degree(cert["vertex"]) == 1
    if c.reason is Reason.BIPARTITE_IMBALANCE:
        x, y = (set(p) for p in cert["parts"])
        if x | y != set(range(g.n)) or x & y:
            return False
        if any(g.has_edge(a, b) for a in x for b in x if a < b):
            return False
        if any(g.has_edge(a, b) for a in y for b in y if a < b):
            return False
        return abs(len(x) - len(y)) > 1
    if c.reason is Reason.THREE_PLUS_COMPONENTS:
        v = cert["cut_vertex"]
        return (len(cert["components"]) >= 3
                and cert["components"] == components_after_removal(g, v))
    if c.reason is Reason.CUT_VERTEX_OBSTRUCTION:
        v = cert["cut_vertex"]
        comps = components_after_removal(g, v)
        if len(comps) != 2:
            return False
        if cert["kind"] == "size-mismatch":
            return sorted(map(len, comps)) == cert["sizes"] \
                and cert["sizes"][0] != cert["sizes"][1]
        side = set(cert["side"])
        if side not in [set(c) for c in comps]:
            return False
        verts = side | {v}
        return not all(g.has_edge(a, b)
                       for a in verts for b in verts if a < b)
    if c.reason is Reason.CUT_VERTEX_COMPLETE:
        v = cert["cut_vertex"]
        comps = cert["parts"]
        if components_after_removal(g, v) != comps or len(comps) != 2:
            return False
        if len(comps[0]) != len(comps[1]) or len(comps[0]) < 2:
            return False
        for comp in comps:
            verts = set(comp) | {v}
            if not all(g.has_edge(a, b)
                       for a in verts for b in verts if a < b):
                return False
        return True
    if c.reason is Reason.GIRTH_GT6_NON_HAM:
        sc = cert["shortest_cycle"]
        if sc is not None:
            closed = sc + [sc[0]]
            if not all(g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
                return False
            if len(set(sc)) != len(sc) or len(sc) != cert["girth"]:
                return False
        return girth(g) > 6 and hamiltonian_cycle(g) is None
    return False
