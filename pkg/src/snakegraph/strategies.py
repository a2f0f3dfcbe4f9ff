"""Executable strategies for both players, lifted from constructive
winnability arguments, plus harnesses that validate a policy against an
exhaustive adversary.

Snake policies are deterministic move choosers that win on their applicable
graphs against every apple placement; placer policies are deterministic
placement schedules that defeat every snake. A policy factory inspects the
graph and raises PolicyInapplicableError when its structural precondition
fails. Policies are pure functions of (graph, state); the ``memory`` dict
they receive is scratch space for caching only, so validation may share it
across branches.

The validators explore the full adversary tree with memoization on
(body, apple): against a deterministic opponent the game value of a state
does not depend on how it was reached (repetition inside a fixed-length
epoch is handled by the walk-shortening argument for the placer side, and by
explicit history tracking for the deterministic snake side). ``leaves``
counts terminal states of the memoized exploration and ``depth`` is the
maximum number of snake moves on any root-to-leaf line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

from .engine import (MoveKind, SnakeState, head_graph, legal_moves)
from .graph import (Graph, SearchCeilingExceeded, bfs_distances, bipartition,
                    components_after_removal, cut_vertices, girth,
                    is_complete)
from .search import (ThetaCertificate, check_theta_certificate,
                     find_spanning_theta, hamiltonian_cycle, is_hamiltonian)

VALIDATION_MAX_STATES = 2_000_000


class PolicyInapplicableError(ValueError):
    """The graph does not satisfy the policy's structural precondition."""


@dataclass
class ValidationReport:
    valid: bool
    leaves: int
    depth: int
    failure: Optional[str] = None

    def __bool__(self) -> bool:
        return self.valid

    def to_json_doc(self) -> dict:
        doc = {"valid": self.valid, "leaves": self.leaves, "depth": self.depth}
        if self.failure:
            doc["failure"] = self.failure
        return doc


class SnakePolicy:
    """Deterministic snake move chooser: (graph, state, memory) -> vertex."""
    name = "snake-policy"

    def choose(self, g: Graph, state: SnakeState, memory: dict) -> int:
        raise NotImplementedError


class PlacerPolicy:
    """Deterministic apple placer: an opening vertex plus a placement rule.

    ``check_move_invariant`` lets a policy assert mid-game structural facts
    its argument relies on; validators call it after every snake move and
    propagate failures.
    """
    name = "placer-policy"

    def choose_start(self, g: Graph, memory: dict) -> int:
        return 0

    def place(self, g: Graph, state: SnakeState, memory: dict) -> int:
        raise NotImplementedError

    def check_move_invariant(self, g: Graph, prev: SnakeState,
                             kind: MoveKind, new: SnakeState) -> None:
        pass


def _farthest_free_vertex(g: Graph, state: SnakeState) -> int:
    """Default placement: farthest from the head by BFS, smallest id first."""
    free = sorted(set(range(g.n)) - set(state.body))
    dist = bfs_distances(g, state.head)
    return max(free, key=lambda u: (dist[u], -u))


# ---------------------------------------------------------------------------
# Snake policies

class HamiltonianSnakePolicy(SnakePolicy):
    """Keep moving along a fixed Hamiltonian cycle.

    The body is always a contiguous arc of the cycle, so the vertex ahead of
    the head is unoccupied (or the tail, at full wrap) and every apple lies
    on the cycle ahead.
    """
    name = "hamiltonian-snake"

    def __init__(self, cycle: list[int]):
        self.cycle = list(cycle)
        self._next = {u: cycle[(i + 1) % len(cycle)]
                      for i, u in enumerate(cycle)}

    def choose(self, g: Graph, state: SnakeState, memory: dict) -> int:
        return self._next[state.head]


def hamiltonian_snake_policy(g: Graph,
                             cycle: Optional[list[int]] = None) -> HamiltonianSnakePolicy:
    if cycle is None:
        cycle = hamiltonian_cycle(g)
        if cycle is None:
            raise PolicyInapplicableError("graph has no hamiltonian cycle")
    if sorted(cycle) != list(range(g.n)):
        raise PolicyInapplicableError("cycle must visit every vertex once")
    closed = cycle + [cycle[0]]
    if any(not g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
        raise PolicyInapplicableError("cycle uses a non-edge")
    return HamiltonianSnakePolicy(cycle)


class ThetaSnakePolicy(SnakePolicy):
    """Ride the two long cycles of a spanning theta with 2-paths.

    The long path plus either 2-path middle forms a cycle through all but
    one vertex. The snake follows the long path toward the far junction and
    crosses whichever middle matches the apple; when the apple sits on the
    off-cycle middle the crossing happens at the junction where the 2-paths
    diverge, which is always reached before any body can repeat.
    """
    name = "theta-snake"

    def __init__(self, cert: ThetaCertificate):
        self.cert = cert
        self._succ = {a: b for a, b in zip(cert.long_path, cert.long_path[1:])}

    def choose(self, g: Graph, state: SnakeState, memory: dict) -> int:
        cert = self.cert
        head = state.head
        if head in (cert.x, cert.y):
            return cert.long_path[0]  # middle -> back to the near junction
        if head == cert.long_path[-1]:
            return self._pick_middle(state)
        return self._succ[head]

    def _pick_middle(self, state: SnakeState) -> int:
        cert = self.cert
        if state.apple == cert.x:
            return cert.x
        if state.apple == cert.y:
            return cert.y
        body = set(state.body)
        free = [m for m in sorted((cert.x, cert.y)) if m not in body]
        if not free:
            raise AssertionError("both theta middles occupied off-schedule")
        return free[0]


def theta_snake_policy(g: Graph,
                       cert: Optional[ThetaCertificate] = None) -> ThetaSnakePolicy:
    if cert is None:
        cert = find_spanning_theta(g)
        if cert is None:
            raise PolicyInapplicableError(
                "graph has no spanning theta with two 2-paths")
    check_theta_certificate(g, cert)
    return ThetaSnakePolicy(cert)


class CutVertexSnakePolicy(SnakePolicy):
    """Winning play on the one winnable cut-vertex shape: two equal complete
    parts joined at a cut vertex.

    Below length m the snake chases the apple, crossing through the cut
    vertex when it must. At length m it refuses to eat until its tail sits
    on the cut vertex (entering through it first if needed), so eating
    leaves one side fully occupied with the other side plus the cut vertex
    forming a complete head graph; from there it rotates to the cut vertex
    if necessary and eats greedily.
    """
    name = "cut-vertex-snake"

    def __init__(self, cut: int, part1: frozenset[int], part2: frozenset[int]):
        self.cut = cut
        self.part1 = part1
        self.part2 = part2
        self.m = len(part1)

    def _part_of(self, v: int) -> Optional[frozenset[int]]:
        if v in self.part1:
            return self.part1
        if v in self.part2:
            return self.part2
        return None  # the cut vertex

    def choose(self, g: Graph, state: SnakeState, memory: dict) -> int:
        apple = state.apple
        assert apple is not None
        head, length = state.head, state.length
        body = set(state.body)
        v = self.cut
        if length < self.m:
            if head == v or apple == v:
                return apple
            same = self._part_of(head)
            if apple in same:
                return apple
            if v not in body:
                return v
            inside = sorted(same - body)
            assert inside, "no room left to retract toward the cut vertex"
            return inside[0]
        if length == self.m:
            if apple == v:
                return apple
            target_part = self._part_of(apple)
            if head == v:
                entries = sorted(target_part - body - {apple})
                return entries[0] if entries else apple
            if head not in target_part:
                if v in body:
                    inside = sorted(self._part_of(head) - body)
                    assert inside, "no room left to free the cut vertex"
                    return inside[0]
                return v
            if state.tail == v:
                return apple
            fillers = sorted(target_part - body - {apple})
            # No filler left means the body already holds the cut vertex and
            # every other vertex of this side: eat now and rotate the head
            # onto the cut vertex afterwards.
            return fillers[0] if fillers else apple
        # Longer than m: occupied is one full part plus the cut vertex plus
        # any prefix of the other part already eaten; eat whenever adjacent,
        # otherwise rotate along the body cycle until the head reaches the
        # cut vertex.
        if g.has_edge(head, apple):
            return apple
        assert g.has_edge(head, state.tail), \
            "rotation requires the head next to the tail"
        return state.tail


def cut_vertex_snake_policy(g: Graph, cut: Optional[int] = None
                            ) -> CutVertexSnakePolicy:
    cuts = cut_vertices(g)
    if not cuts:
        raise PolicyInapplicableError("graph has no cut vertex")
    v = cuts[0] if cut is None else cut
    comps = components_after_removal(g, v)
    if len(comps) != 2:
        raise PolicyInapplicableError(
            f"removing {v} leaves {len(comps)} components, need exactly 2")
    p1, p2 = (frozenset(c) for c in comps)
    if len(p1) != len(p2) or len(p1) < 2:
        raise PolicyInapplicableError(
            "the two sides of the cut vertex must have equal size >= 2")
    for part in (p1, p2):
        verts = part | {v}
        if not all(g.has_edge(a, b) for a in verts for b in verts if a < b):
            raise PolicyInapplicableError(
                "each side plus the cut vertex must be complete")
    return CutVertexSnakePolicy(v, p1, p2)


# ---------------------------------------------------------------------------
# Placer policies

class OddBipartitePlacerPolicy(PlacerPolicy):
    """Defeats the snake on odd bipartite graphs with no spanning theta.

    Let the larger side be X (one bigger than Y). Placements are arbitrary
    until the snake reaches length n-3, when exactly one Y vertex is free:
    the apple goes there. Eating it puts head and tail in Y with both free
    vertices in X; at least one of them is not adjacent to both head and
    tail (otherwise a spanning theta would exist) and receives the apple.
    The snake is then forced onto the long cycle and starves.
    """
    name = "odd-bipartite-placer"

    def __init__(self, larger: frozenset[int], smaller: frozenset[int]):
        self.larger = larger
        self.smaller = smaller

    def place(self, g: Graph, state: SnakeState, memory: dict) -> int:
        n = g.n
        length = state.length
        free = sorted(set(range(n)) - set(state.body))
        if length == n - 3:
            in_small = [u for u in free if u in self.smaller]
            assert len(in_small) == 1, \
                "parity violation: expected exactly one free vertex in the " \
                "smaller part at length n-3"
            return in_small[0]
        if length == n - 2:
            assert all(u in self.larger for u in free) and len(free) == 2
            head, tail = state.head, state.tail
            blockers = [u for u in free
                        if not (g.has_edge(u, head) and g.has_edge(u, tail))]
            assert blockers, \
                "both free vertices close 2-paths: a spanning theta exists"
            return blockers[0]
        if length == n - 1:
            return free[0]
        return _farthest_free_vertex(g, state)


def odd_bipartite_placer_policy(g: Graph) -> OddBipartitePlacerPolicy:
    if g.n % 2 == 0:
        raise PolicyInapplicableError("graph is even-sized")
    if g.n < 5:
        # the schedule's case analysis starts from an eat at length n-3;
        # 3-vertex graphs fall to the leaf-vertex schedule instead
        raise PolicyInapplicableError("graph too small for this schedule")
    parts = bipartition(g)
    if parts is None:
        raise PolicyInapplicableError("graph is not bipartite")
    x, y = parts
    if abs(len(x) - len(y)) != 1:
        raise PolicyInapplicableError(
            "part sizes must differ by exactly 1 (larger imbalances fall to "
            "the no-hamiltonian-path argument)")
    if find_spanning_theta(g) is not None:
        raise PolicyInapplicableError(
            "graph has a spanning theta: the snake wins it")
    larger, smaller = (x, y) if len(x) > len(y) else (y, x)
    return OddBipartitePlacerPolicy(frozenset(larger), frozenset(smaller))


class ConnectivityPlacerPolicy(PlacerPolicy):
    """Defeats the snake on cut-vertex graphs outside the winnable shape.

    Four schedules, picked at construction:

    * degree-one: second apple on a degree-1 vertex; eating it strands the
      head behind its own neck.
    * many-components: three or more sides mean no Hamiltonian path, so the
      snake can never finish; any placements do.
    * size-mismatch (smaller side size m1): bait the snake to fill the small
      side at m1-1, pull it across at m1, and bait it back at m1+1; it is
      then too long ever to cross again.
    * incompleteness (equal sides size m, an incomplete side G2): bait into
      G2 at m-1, back into G1 at m, keep it in G1 at m+1 while free G1
      vertices remain, then place in G2 preferring vertices not adjacent to
      the cut vertex; from length m+2 on the snake is longer than any cycle
      and the apple avoids the head whenever possible, so the head graph
      stays incomplete and the snake starves.
    """
    name = "connectivity-placer"

    SCHEDULE_DEGREE_ONE = "degree-one"
    SCHEDULE_MANY_COMPONENTS = "many-components"
    SCHEDULE_SIZE_MISMATCH = "size-mismatch"
    SCHEDULE_INCOMPLETE = "incomplete-side"

    def __init__(self, schedule: str, cut: int,
                 small: frozenset[int] = frozenset(),
                 other: frozenset[int] = frozenset(),
                 pendant: int = -1):
        self.schedule = schedule
        self.cut = cut
        self.small = small      # mismatch: smaller side; incomplete: G1
        self.other = other      # mismatch: a larger side; incomplete: G2
        self.pendant = pendant

    def choose_start(self, g: Graph, memory: dict) -> int:
        if self.schedule == self.SCHEDULE_DEGREE_ONE:
            return min(v for v in range(g.n) if v != self.pendant)
        return 0

    def place(self, g: Graph, state: SnakeState, memory: dict) -> int:
        free = sorted(set(range(g.n)) - set(state.body))
        length = state.length
        if self.schedule == self.SCHEDULE_DEGREE_ONE:
            if length == 1 and self.pendant in free:
                return self.pendant
            return _farthest_free_vertex(g, state)
        if self.schedule == self.SCHEDULE_MANY_COMPONENTS:
            return _farthest_free_vertex(g, state)
        if self.schedule == self.SCHEDULE_SIZE_MISMATCH:
            m1 = len(self.small)
            if length == m1 - 1:
                picks = [u for u in free if u in self.small]
            elif length == m1:
                picks = [u for u in free if u in self.other]
            elif length == m1 + 1:
                picks = [u for u in free if u in self.small]
            else:
                return _farthest_free_vertex(g, state)
            assert picks, "schedule invariant: the targeted side must have " \
                          "a free vertex"
            return picks[0]
        # incomplete-side schedule; small = G1, other = incomplete G2
        m = len(self.small)
        if length == m - 1:
            picks = [u for u in free if u in self.other]
            assert picks
            return picks[0]
        if length == m:
            picks = [u for u in free if u in self.small]
            assert picks, "at length m at most m-2 G1 vertices are occupied"
            return picks[0]
        if length == m + 1:
            in_g1 = [u for u in free if u in self.small]
            if in_g1:
                return in_g1[0]
            in_g2 = [u for u in free if u in self.other]
            assert in_g2
            detached = [u for u in in_g2 if not g.has_edge(u, self.cut)]
            return detached[0] if detached else in_g2[0]
        if length >= m + 2:
            avoid_head = [u for u in free if not g.has_edge(u, state.head)]
            return avoid_head[0] if avoid_head else free[0]
        return _farthest_free_vertex(g, state)

    def check_move_invariant(self, g: Graph, prev: SnakeState,
                             kind: MoveKind, new: SnakeState) -> None:
        if kind is MoveKind.STEP:
            freed = prev.tail
            assert freed not in new.body, "a step must free the old tail"
            assert new.apple != freed, "the apple can never sit on the " \
                                       "vertex a step just freed"
            if (self.schedule == self.SCHEDULE_INCOMPLETE
                    and new.length >= len(self.small) + 2):
                # While the snake outruns every cycle, no step may hand it a
                # complete head graph.
                assert not is_complete(head_graph(g, new)), \
                    "head graph became complete after a step during the " \
                    "long-snake tactic"


def connectivity_placer_policy(g: Graph) -> ConnectivityPlacerPolicy:
    cuts = cut_vertices(g)
    if not cuts:
        raise PolicyInapplicableError("graph is 2-connected")
    v = cuts[0]
    comps = [frozenset(c) for c in components_after_removal(g, v)]
    singles = sorted(min(c) for c in comps if len(c) == 1)
    if singles:
        return ConnectivityPlacerPolicy(
            ConnectivityPlacerPolicy.SCHEDULE_DEGREE_ONE, v,
            pendant=singles[0])
    if len(comps) >= 3:
        return ConnectivityPlacerPolicy(
            ConnectivityPlacerPolicy.SCHEDULE_MANY_COMPONENTS, v)
    a, b = sorted(comps, key=len)
    if len(a) != len(b):
        return ConnectivityPlacerPolicy(
            ConnectivityPlacerPolicy.SCHEDULE_SIZE_MISMATCH, v,
            small=a, other=b)
    incomplete = []
    for part in comps:
        verts = part | {v}
        if not all(g.has_edge(x, y) for x in verts for y in verts if x < y):
            incomplete.append(part)
    if not incomplete:
        raise PolicyInapplicableError(
            "both sides plus the cut vertex are complete: the snake wins")
    g2 = min(incomplete, key=min)
    g1 = next(c for c in comps if c is not g2)
    return ConnectivityPlacerPolicy(
        ConnectivityPlacerPolicy.SCHEDULE_INCOMPLETE, v, small=g1, other=g2)


class GirthPlacerPolicy(PlacerPolicy):
    """Defeats the snake on non-Hamiltonian graphs of girth above 6.

    Placements are arbitrary until the snake reaches length n-3. From then
    on the policy reads off which of the four scenarios holds (snake inside
    a cycle one, two, or three short of the graph, or inside no cycle) and
    plays the corresponding starving placement: an off-cycle vertex for the
    long-cycle cases, the middle free vertex of the unique traversal chain
    (or the mutual neighbor of the other two free vertices) otherwise.
    """
    name = "girth-placer"

    def place(self, g: Graph, state: SnakeState, memory: dict) -> int:
        n = g.n
        length = state.length
        free = sorted(set(range(n)) - set(state.body))
        if length < n - 3:
            return _farthest_free_vertex(g, state)
        if length == n - 1:
            return free[0]
        head, tail = state.head, state.tail
        if length == n - 3:
            # Snake contained in an (n-1)-cycle: a 2-vertex return path.
            for p in free:
                if not g.has_edge(tail, p):
                    continue
                for q in free:
                    if q != p and g.has_edge(p, q) and g.has_edge(q, head):
                        off = [u for u in free if u not in (p, q)]
                        return off[0]
            # Snake contained in an (n-2)-cycle: a 1-vertex return path.
            for p in free:
                if g.has_edge(tail, p) and g.has_edge(p, head):
                    return min(u for u in free if u != p)
            if g.has_edge(head, tail):
                # The body itself is an (n-3)-cycle; aim at the only vertex
                # that could sit between the other two free ones.
                mutual = [a for a in free
                          if all(g.has_edge(a, b) for b in free if b != a)]
                return mutual[0] if mutual else free[0]
            return self._no_cycle_pick(g, state, free)
        if length == n - 2:
            for p in free:
                if g.has_edge(tail, p) and g.has_edge(p, head):
                    return next(u for u in free if u != p)
            if g.has_edge(head, tail):
                return free[0]
            return self._no_cycle_pick(g, state, free)
        return _farthest_free_vertex(g, state)

    def _no_cycle_pick(self, g: Graph, state: SnakeState,
                       free: list[int]) -> int:
        """No cycle contains the snake: force the single non-losing move."""
        head = state.head
        candidates = [u for u in free if g.has_edge(u, head)]
        if not candidates:
            return free[0]  # the snake is already stuck or nearly so
        if len(candidates) == 1 and len(free) == 3:
            u = candidates[0]
            chain = [w for w in free
                     if w != u and g.has_edge(u, w)
                     and any(g.has_edge(w, z) for z in free if z not in (u, w))]
            if chain:
                # The snake can sweep all three in one order only; put the
                # apple on the middle vertex of that sweep.
                middles = sorted(set(chain))
                assert len(middles) == 1, \
                    "girth above 6 admits one sweep order only"
                return middles[0]
            return u
        if len(candidates) == 1:
            return candidates[0]
        # Several head neighbors are free; prefer one whose consumption
        # leaves the remaining free vertices non-adjacent.
        for u in candidates:
            rest = [w for w in free if w != u]
            if len(rest) < 2 or not g.has_edge(rest[0], rest[1]):
                return u
        return candidates[0]


def girth_placer_policy(g: Graph) -> GirthPlacerPolicy:
    if girth(g) <= 6:
        raise PolicyInapplicableError("girth must exceed 6")
    if is_hamiltonian(g):
        raise PolicyInapplicableError("graph is hamiltonian: the snake wins")
    return GirthPlacerPolicy()


# ---------------------------------------------------------------------------
# Greedy fallbacks (for the play service when no proof policy applies)

def greedy_snake_move(g: Graph, state: SnakeState) -> int:
    """Shortest safe path toward the apple: BFS through unoccupied vertices,
    avoiding first steps that leave no follow-up move."""
    moves = legal_moves(g, state)
    if not moves:
        raise ValueError("no legal move")
    order = {t: i for i, (t, _) in enumerate(moves)}
    occupied = set(state.body)
    parent: dict[int, int] = {state.head: -1}
    queue = deque([state.head])
    path_step: Optional[int] = None
    while queue:
        u = queue.popleft()
        if u == state.apple:
            while parent[u] != state.head and parent[u] != -1:
                u = parent[u]
            path_step = u if parent[u] == state.head else None
            break
        for w in g.adj[u]:
            if w not in parent and (w not in occupied or w == state.apple):
                parent[w] = u
                queue.append(w)

    def safe(t: int) -> bool:
        kind = dict(moves)[t]
        if kind is MoveKind.EAT:
            nxt = SnakeState((t,) + state.body, apple=None)
            if nxt.length == g.n:
                return True
            probe = set(nxt.body)
            return any(w not in probe for w in g.adj[t])
        nxt = SnakeState((t,) + state.body[:-1], apple=state.apple)
        return bool(legal_moves(g, nxt))

    if path_step is not None and path_step in order and safe(path_step):
        return path_step
    for t, _ in moves:
        if safe(t):
            return t
    return moves[0][0]


def greedy_placer_vertex(g: Graph, state: SnakeState) -> int:
    return _farthest_free_vertex(g, state)


# ---------------------------------------------------------------------------
# Validation harnesses

def validate_snake_policy(g: Graph, policy: SnakePolicy,
                          max_states: int = VALIDATION_MAX_STATES
                          ) -> ValidationReport:
    """Explore every placer choice against the policy's deterministic
    replies; valid iff every leaf is a snake win."""
    n = g.n
    memo: dict[tuple[tuple[int, ...], int], tuple[bool, int, int]] = {}
    memory: dict = {}
    failure: list[str] = []

    def eval_epoch(body: tuple[int, ...], apple: int) -> tuple[bool, int, int]:
        key = (body, apple)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(memo) >= max_states:
            raise SearchCeilingExceeded(
                f"snake validation ceiling of {max_states} states reached")
        history = {body}
        cur = body
        plies = 0
        result: Optional[tuple[bool, int, int]] = None
        while result is None:
            state = SnakeState(body=cur, apple=apple)
            moves = legal_moves(g, state)
            if not moves:
                if not failure:
                    failure.append(f"stuck at body {cur} apple {apple}")
                result = (False, 1, plies)
                break
            try:
                target = policy.choose(g, state, memory)
            except (PolicyInapplicableError, AssertionError) as e:
                if not failure:
                    failure.append(f"policy error at body {cur}: {e}")
                result = (False, 1, plies)
                break
            kinds = dict(moves)
            if target not in kinds:
                if not failure:
                    failure.append(
                        f"illegal choice {target} at body {cur} apple {apple}")
                result = (False, 1, plies)
                break
            plies += 1
            if kinds[target] is MoveKind.EAT:
                grown = (target,) + cur
                if len(grown) == n:
                    result = (True, 1, plies)
                    break
                ok, leaves, depth = True, 0, 0
                for u in range(n):
                    if u == target or u in grown:
                        continue
                    cok, cl, cd = eval_epoch(grown, u)
                    leaves += cl
                    depth = max(depth, cd)
                    if not cok:
                        ok = False
                        break
                result = (ok, leaves, plies + depth)
                break
            cur = (target,) + cur[:-1]
            if cur in history:
                if not failure:
                    failure.append(
                        f"policy repeated body {cur} with apple {apple}")
                result = (False, 1, plies)
                break
            history.add(cur)
        memo[key] = result
        return result

    ok_all, leaves_all, depth_all = True, 0, 0
    for a0 in range(n):
        for a1 in range(n):
            if a1 == a0:
                continue
            ok, leaves, depth = eval_epoch((a0,), a1)
            leaves_all += leaves
            depth_all = max(depth_all, depth)
            if not ok:
                ok_all = False
    return ValidationReport(valid=ok_all, leaves=leaves_all, depth=depth_all,
                            failure=failure[0] if failure else None)


def validate_placer_policy(g: Graph, policy: PlacerPolicy,
                           max_states: int = VALIDATION_MAX_STATES
                           ) -> ValidationReport:
    """Explore every snake line (fixed-length play closed under
    reachability) against the policy's deterministic placements; valid iff
    no line ends in a snake win."""
    n = g.n
    full = (1 << n) - 1
    adj = g.adj_bits
    memo: dict[tuple[tuple[int, ...], int], tuple[bool, int, int]] = {}
    memory: dict = {}
    failure: list[str] = []

    def eval_epoch(body: tuple[int, ...], apple: int) -> tuple[bool, int, int]:
        key = (body, apple)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(memo) >= max_states:
            raise SearchCeilingExceeded(
                f"placer validation ceiling of {max_states} states reached")
        apple_bit = 1 << apple
        occ0 = 0
        for v in body:
            occ0 |= 1 << v
        seen = {body}
        frontier: list[tuple[tuple[int, ...], int]] = [(body, occ0)]
        eats: list[tuple[tuple[int, ...], int, int]] = []  # body, occ, dist
        dist = 0
        while frontier:
            nxt: list[tuple[tuple[int, ...], int]] = []
            for b, occ in frontier:
                head = b[0]
                tail = b[-1]
                if adj[head] & apple_bit:
                    eats.append((b, occ, dist))
                prev_state = SnakeState(body=b, apple=apple)
                targets = adj[head] & ~occ & ~apple_bit
                while targets:
                    tb = targets & -targets
                    targets ^= tb
                    t = tb.bit_length() - 1
                    nb = (t,) + b[:-1]
                    if nb in seen:
                        continue
                    seen.add(nb)
                    no = (occ ^ (1 << tail)) | tb
                    _check_invariant(prev_state, MoveKind.STEP, nb, apple)
                    nxt.append((nb, no))
                if len(b) >= 3 and adj[head] >> tail & 1:
                    nb = (tail,) + b[:-1]
                    if nb not in seen:
                        seen.add(nb)
                        _check_invariant(prev_state, MoveKind.ROTATE, nb, apple)
                        nxt.append((nb, occ))
            frontier = nxt
            dist += 1
        if failure:
            result = (False, 1, 0)
            memo[key] = result
            return result
        if not eats:
            result = (True, 1, dist)  # the snake starves in this epoch
            memo[key] = result
            return result
        ok_all, leaves_all, depth_all = True, 0, 0
        for b, occ, d in eats:
            grown = (apple,) + b
            if len(grown) == n:
                if not failure:
                    failure.append(f"snake wins by eating at {b}")
                ok_all = False
                leaves_all += 1
                depth_all = max(depth_all, d + 1)
                continue
            try:
                u = policy.place(g, SnakeState(body=grown, apple=None), memory)
            except (PolicyInapplicableError, AssertionError) as e:
                if not failure:
                    failure.append(f"policy error after eating at {b}: {e}")
                ok_all = False
                leaves_all += 1
                continue
            if not (0 <= u < n) or u in grown:
                if not failure:
                    failure.append(
                        f"illegal placement {u} after eating at {b}")
                ok_all = False
                leaves_all += 1
                continue
            cok, cl, cd = eval_epoch(grown, u)
            ok_all &= cok
            leaves_all += cl
            depth_all = max(depth_all, d + 1 + cd)
            if not cok:
                break
        result = (ok_all, leaves_all, depth_all)
        memo[key] = result
        return result

    def _check_invariant(prev: SnakeState, kind: MoveKind,
                         nb: tuple[int, ...], apple: int) -> None:
        try:
            policy.check_move_invariant(
                g, prev, kind, SnakeState(body=nb, apple=apple))
        except AssertionError as e:
            if not failure:
                failure.append(str(e))

    try:
        a0 = policy.choose_start(g, memory)
        opening = SnakeState(body=(a0,), apple=None)
        a1 = policy.place(g, opening, memory)
    except (PolicyInapplicableError, AssertionError) as e:
        return ValidationReport(False, 0, 0, failure=f"opening failed: {e}")
    if not (0 <= a0 < n) or a1 == a0 or not (0 <= a1 < n):
        return ValidationReport(False, 0, 0,
                                failure=f"bad opening ({a0}, {a1})")
    ok, leaves, depth = eval_epoch((a0,), a1)
    return ValidationReport(valid=ok and not failure, leaves=leaves,
                            depth=depth,
                            failure=failure[0] if failure else None)


# ---------------------------------------------------------------------------
# Registry (CLI and service lookups)

SNAKE_POLICY_FACTORIES: dict[str, Callable[[Graph], SnakePolicy]] = {
    "hamiltonian-snake": hamiltonian_snake_policy,
    "theta-snake": theta_snake_policy,
    "cut-vertex-snake": cut_vertex_snake_policy,
}

PLACER_POLICY_FACTORIES: dict[str, Callable[[Graph], PlacerPolicy]] = {
    "odd-bipartite-placer": odd_bipartite_placer_policy,
    "connectivity-placer": connectivity_placer_policy,
    "girth-placer": girth_placer_policy,
}


def make_policy(name: str, g: Graph):
    """Build a named policy for a graph. Returns ("snake"|"placer", policy).
    Raises KeyError for unknown names, PolicyInapplicableError when the
    graph does not fit."""
    if name in SNAKE_POLICY_FACTORIES:
        return "snake", SNAKE_POLICY_FACTORIES[name](g)
    if name in PLACER_POLICY_FACTORIES:
        return "placer", PLACER_POLICY_FACTORIES[name](g)
    raise KeyError(f"unknown policy {name!r}")


def applicable_snake_policy(g: Graph) -> Optional[SnakePolicy]:
    """First proof policy that fits the graph, in documented order."""
    for factory in (hamiltonian_snake_policy, theta_snake_policy,
                    cut_vertex_snake_policy):
        try:
            return factory(g)
        except (PolicyInapplicableError, SearchCeilingExceeded):
            continue
    return None


def applicable_placer_policy(g: Graph) -> Optional[PlacerPolicy]:
    for factory in (connectivity_placer_policy, odd_bipartite_placer_policy,
                    girth_placer_policy):
        try:
            return factory(g)
        except (PolicyInapplicableError, SearchCeilingExceeded):
            continue
    return None


def validate_policy(g: Graph, name: str,
                    max_states: int = VALIDATION_MAX_STATES) -> ValidationReport:
    kind, policy = make_policy(name, g)
    if kind == "snake":
        return validate_snake_policy(g, policy, max_states)
    return validate_placer_policy(g, policy, max_states)
