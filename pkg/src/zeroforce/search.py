"""Fast-mixed and parallel fast-mixed search.

Searchers are placed on contaminated vertices or slid along a contaminated
edge ``{u, v}`` when every other edge at ``u`` is already clear.  An edge
clears when a searcher slides along it or when both of its endpoints are
occupied.  A graph counts as cleared once every edge *and* every vertex is
clear; the vertex condition only matters for isolated vertices, which
would otherwise need no searcher at all.

In the parallel model the graph is split after every action: a live
subgraph ``H`` whose contaminated vertices ``X`` fall apart into
components ``X_1..X_j`` is replaced by ``H[X_i + N_H(X_i)]`` with the
boundary ``N_H(X_i)`` occupied.  Subgraph ids are ``"0"`` for the root and
``"<parent>.<i>"`` for children, numbered by the smallest vertex of ``X_i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import PreconditionError, TraceInvalidError
from .forcing import ForceEvent, ForcingTrace, Rule, derived_set
from .graph import Graph, edge_key


@dataclass(frozen=True)
class SearchAction:
    """``place`` puts a searcher on ``v``; ``slide`` moves one from ``u`` to ``v``.

    ``target`` optionally names the live subgraph (parallel model only).
    """

    kind: str
    v: int
    u: int | None = None
    target: str | None = None

    def __post_init__(self):
        if self.kind not in ("place", "slide"):
            raise ValueError(f"unknown action kind {self.kind!r}")
        if (self.kind == "slide") != (self.u is not None):
            raise ValueError("slide needs a source vertex, place must not have one")

    @classmethod
    def place(cls, v: int, target: str | None = None) -> "SearchAction":
        return cls("place", v, None, target)

    @classmethod
    def slide(cls, u: int, v: int, target: str | None = None) -> "SearchAction":
        return cls("slide", v, u, target)


@dataclass(frozen=True)
class SearchStrategy:
    actions: tuple[SearchAction, ...]
    model: str = "fms"

    def __post_init__(self):
        if self.model not in ("fms", "pfms"):
            raise ValueError(f"unknown search model {self.model!r}")

    @property
    def placements(self) -> int:
        return sum(a.kind == "place" for a in self.actions)


class FmsOutcome(NamedTuple):
    cleared: bool
    first_illegal: int | None


@dataclass
class Subgraph:
    id: str
    vertices: frozenset[int]
    occupied: set[int]
    contaminated: set[int]
    cleared_edges: set[tuple[int, int]] = field(default_factory=set)


@dataclass
class ParallelState:
    live: list[Subgraph]
    retired: list[str] = field(default_factory=list)

    def find(self, sid: str) -> Subgraph | None:
        return next((h for h in self.live if h.id == sid), None)


class PfmsOutcome(NamedTuple):
    cleared: bool
    state: ParallelState
    first_illegal: int | None


def _check_vertices(g: Graph, step: int, act: SearchAction) -> None:
    for x in (act.u, act.v):
        if x is not None and not 0 <= x < g.n:
            raise TraceInvalidError(step, f"vertex {x} outside the graph")


def _apply(g: Graph, verts, occ: set[int], contam: set[int], cleared: set, act: SearchAction) -> str | None:
    """Apply one action inside the subgraph on ``verts``; return a reason if illegal."""
    if act.kind == "place":
        if act.v not in contam:
            return f"place on {act.v}: vertex is not contaminated"
        occ.add(act.v)
        contam.discard(act.v)
    else:
        u, v = act.u, act.v
        if u not in occ:
            return f"slide {u} -> {v}: no searcher on {u}"
        if v not in g.adj[u] or v not in verts:
            return f"slide {u} -> {v}: not an edge here"
        e = edge_key(u, v)
        if v not in contam or e in cleared:
            return f"slide {u} -> {v}: target or edge already clear"
        for w in g.adj[u]:
            if w != v and w in verts and edge_key(u, w) not in cleared:
                return f"slide {u} -> {v}: edge {{{u}, {w}}} at {u} is still contaminated"
        occ.discard(u)
        occ.add(v)
        contam.discard(v)
        cleared.add(e)
    for a in occ:
        for b in g.adj[a]:
            if b in occ and b in verts:
                cleared.add(edge_key(a, b))
    return None


def _edges_within(g: Graph, verts) -> int:
    return sum(len(g.adj[v] & verts) for v in verts) // 2


def simulate_fms(g: Graph, s: SearchStrategy) -> FmsOutcome:
    """Replay a fast-mixed strategy; stop at the first illegal action."""
    occ: set[int] = set()
    contam = set(range(g.n))
    cleared: set = set()
    verts = frozenset(range(g.n))
    for step, act in enumerate(s.actions):
        _check_vertices(g, step, act)
        if _apply(g, verts, occ, contam, cleared, act) is not None:
            return FmsOutcome(False, step)
    return FmsOutcome(not contam and len(cleared) == g.m, None)


def _split(g: Graph, h: Subgraph) -> list[Subgraph]:
    """Replace ``h`` by one subgraph per contaminated component, if there are several."""
    parts = []
    seen: set[int] = set()
    for s in sorted(h.contaminated):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w in g.adj[x]:
                if w in h.contaminated and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        parts.append(comp)
    if len(parts) < 2:
        return [h]
    out = []
    for i, comp in enumerate(parts):
        boundary = {w for x in comp for w in g.adj[x] if w in h.vertices and w not in comp}
        verts = frozenset(comp | boundary)
        cleared = {e for e in h.cleared_edges if e[0] in verts and e[1] in verts}
        child = Subgraph(f"{h.id}.{i}", verts, set(boundary), set(comp), cleared)
        for a in boundary:
            for b in g.adj[a] & boundary:
                child.cleared_edges.add(edge_key(a, b))
        out.append(child)
    return out


def _is_done(g: Graph, h: Subgraph) -> bool:
    return not h.contaminated and len(h.cleared_edges) == _edges_within(g, h.vertices)


def initial_parallel_state(g: Graph) -> ParallelState:
    root = Subgraph("0", frozenset(range(g.n)), set(), set(range(g.n)))
    return ParallelState([h for h in _split(g, root) if not _is_done(g, h)])


def _locate(state: ParallelState, step: int, act: SearchAction) -> Subgraph | None:
    if act.target is not None:
        h = state.find(act.target)
        if h is None:
            why = "already cleared" if act.target in state.retired else "unknown"
            raise TraceInvalidError(step, f"subgraph @{act.target} is {why}")
        return h
    for h in state.live:
        if act.v in h.contaminated and (act.u is None or act.u in h.vertices):
            return h
    return None


def simulate_pfms(g: Graph, s: SearchStrategy) -> PfmsOutcome:
    """Replay a parallel fast-mixed strategy.

    Actions without a target are sent to the live subgraph in which their
    destination vertex is contaminated.  Addressing a cleared or unknown
    subgraph raises :class:`TraceInvalidError`; an illegal move inside a
    live subgraph stops the replay and is reported in ``first_illegal``.
    """
    state = initial_parallel_state(g)
    for step, act in enumerate(s.actions):
        _check_vertices(g, step, act)
        h = _locate(state, step, act)
        if h is None or _apply(g, h.vertices, h.occupied, h.contaminated, h.cleared_edges, act) is not None:
            return PfmsOutcome(False, state, step)
        idx = state.live.index(h)
        replacement = []
        for child in _split(g, h):
            if _is_done(g, child):
                state.retired.append(child.id)
            else:
                replacement.append(child)
        state.live[idx:idx + 1] = replacement
    return PfmsOutcome(not state.live, state, None)


# conversions --------------------------------------------------------------


def _complete_trace(g: Graph, trace: ForcingTrace, rule: Rule) -> ForcingTrace:
    final, replayed = derived_set(g, trace.initial, rule, trace.events)
    if len(final) != g.n:
        raise PreconditionError(f"trace leaves {g.n - len(final)} vertices white")
    return replayed


def zf_to_fms(g: Graph, trace: ForcingTrace) -> SearchStrategy:
    """Place on every initial vertex, then slide along each force."""
    replayed = _complete_trace(g, trace, Rule.STANDARD)
    actions = [SearchAction.place(v) for v in sorted(replayed.initial)]
    actions += [SearchAction.slide(e.forcer, e.forced) for e in replayed.events]
    return SearchStrategy(tuple(actions), "fms")


def fms_to_zf(g: Graph, s: SearchStrategy) -> ForcingTrace:
    """Placed-on vertices become the initial set, slides become forces."""
    outcome = simulate_fms(g, s)
    if not outcome.cleared:
        raise PreconditionError(f"strategy does not clear the graph (first illegal step: {outcome.first_illegal})")
    initial = frozenset(a.v for a in s.actions if a.kind == "place")
    events = [(a.u, a.v) for a in s.actions if a.kind == "slide"]
    return _complete_trace(g, ForcingTrace(initial, tuple(ForceEvent(u, v, i) for i, (u, v) in enumerate(events))), Rule.STANDARD)


def pzf_to_pfms(g: Graph, trace: ForcingTrace) -> SearchStrategy:
    """Positive trace to a parallel strategy, addressing every action to its live subgraph."""
    replayed = _complete_trace(g, trace, Rule.POSITIVE)
    untargeted = [SearchAction.place(v) for v in sorted(replayed.initial)]
    untargeted += [SearchAction.slide(e.forcer, e.forced) for e in replayed.events]
    state = initial_parallel_state(g)
    actions = []
    for step, act in enumerate(untargeted):
        h = _locate(state, step, act)
        if h is None:
            raise PreconditionError(f"no live subgraph for {act}")
        actions.append(SearchAction(act.kind, act.v, act.u, h.id))
        outcome = simulate_pfms(g, SearchStrategy(tuple(actions), "pfms"))
        if outcome.first_illegal is not None:
            raise PreconditionError(f"force {act.u} -> {act.v} has no legal slide")
        state = outcome.state
    return SearchStrategy(tuple(actions), "pfms")


def pfms_to_pzf(g: Graph, s: SearchStrategy) -> ForcingTrace:
    outcome = simulate_pfms(g, s)
    if not outcome.cleared:
        raise PreconditionError(f"strategy does not clear the graph (first illegal step: {outcome.first_illegal})")
    initial = frozenset(a.v for a in s.actions if a.kind == "place")
    events = tuple(ForceEvent(a.u, a.v, i) for i, a in enumerate(a for a in s.actions if a.kind == "slide"))
    return _complete_trace(g, ForcingTrace(initial, events, Rule.POSITIVE), Rule.POSITIVE)


# strategy-space minimisation ----------------------------------------------
#
# 0-1 breadth-first search over canonical simulator states: placing costs 1,
# sliding costs 0, so the first goal state popped has the fewest placements.


def _moves(g: Graph, verts, occ, contam, cleared):
    for v in sorted(contam):
        yield SearchAction.place(v), 1
    for u in sorted(occ):
        for v in g.sorted_adj[u]:
            if v in contam and v in verts:
                yield SearchAction.slide(u, v), 0


def min_fms_placements(g: Graph) -> tuple[int, SearchStrategy]:
    """Fewest placements over all fast-mixed strategies, with one optimal strategy."""
    start = (frozenset(), frozenset(range(g.n)), frozenset())
    verts = frozenset(range(g.n))
    best = {start: 0}
    back: dict = {start: None}
    queue = deque([(0, start)])
    while queue:
        cost, state = queue.popleft()
        if cost > best[state]:
            continue
        occ, contam, cleared = state
        if not contam and len(cleared) == g.m:
            actions = []
            while back[state] is not None:
                state, act = back[state]
                actions.append(act)
            return cost, SearchStrategy(tuple(reversed(actions)), "fms")
        for act, w in _moves(g, verts, occ, contam, cleared):
            o, c, e = set(occ), set(contam), set(cleared)
            if _apply(g, verts, o, c, e, act) is not None:
                continue
            nxt = (frozenset(o), frozenset(c), frozenset(e))
            if cost + w < best.get(nxt, g.n + 1):
                best[nxt] = cost + w
                back[nxt] = (state, act)
                if w:
                    queue.append((cost + w, nxt))
                else:
                    queue.appendleft((cost, nxt))
    raise AssertionError("placing on every vertex always clears the graph")


def _freeze(state: ParallelState):
    return frozenset(
        (h.vertices, frozenset(h.occupied), frozenset(h.contaminated), frozenset(h.cleared_edges)) for h in state.live
    )


def min_pfms_placements(g: Graph) -> int:
    """Fewest placements over all parallel fast-mixed strategies."""
    start = _freeze(initial_parallel_state(g))
    best = {start: 0}
    queue = deque([(0, start)])
    while queue:
        cost, key = queue.popleft()
        if cost > best[key]:
            continue
        if not key:
            return cost
        for vs, os_, cs, es in key:
            for act, w in _moves(g, vs, os_, cs, es):
                o, c, e = set(os_), set(cs), set(es)
                if _apply(g, vs, o, c, e, act) is not None:
                    continue
                h = Subgraph("x", vs, o, c, e)
                rest = [t for t in key if t != (vs, os_, cs, es)]
                new = [
                    (ch.vertices, frozenset(ch.occupied), frozenset(ch.contaminated), frozenset(ch.cleared_edges))
                    for ch in _split(g, h)
                    if not _is_done(g, ch)
                ]
                nxt = frozenset(rest + new)
                if cost + w < best.get(nxt, g.n + 1):
                    best[nxt] = cost + w
                    if w:
                        queue.append((cost + w, nxt))
                    else:
                        queue.appendleft((cost, nxt))
    raise AssertionError("placing on every vertex always clears the graph")
