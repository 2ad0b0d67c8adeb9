"""Standard and positive colour-change rules, forcing traces and tree covers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

from .errors import PreconditionError, TraceInvalidError
from .graph import Graph, edge_key


class Rule(str, Enum):
    STANDARD = "standard"
    POSITIVE = "positive"


@dataclass(frozen=True)
class ForceEvent:
    """``forcer -> forced`` at position ``step``.

    For the positive rule ``component`` is the white component W_i (of the
    graph minus the current black set) inside which the force was legal.
    """

    forcer: int
    forced: int
    step: int = 0
    component: frozenset[int] | None = None


@dataclass(frozen=True)
class ForcingTrace:
    initial: frozenset[int]
    events: tuple[ForceEvent, ...] = ()
    rule: Rule = Rule.STANDARD

    def forced_vertices(self) -> frozenset[int]:
        return self.initial | {e.forced for e in self.events}


@dataclass(frozen=True)
class Tree:
    root: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 1


@dataclass(frozen=True)
class TreeCover:
    trees: tuple[Tree, ...]

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    @property
    def nontrivial_count(self) -> int:
        return sum(not t.trivial for t in self.trees)


Schedule = Union[str, Sequence[Union[ForceEvent, tuple[int, int]]]]


def white_components(g: Graph, black: Sequence[bool]) -> tuple[list[int], list[frozenset[int]]]:
    """Label the components of ``g`` minus the black vertices.

    Returns ``(comp_id, comps)`` where ``comp_id[v]`` is -1 for black vertices.
    """
    comp_id = [-1] * g.n
    comps = []
    for s in range(g.n):
        if black[s] or comp_id[s] != -1:
            continue
        cid = len(comps)
        comp_id[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not black[w] and comp_id[w] == -1:
                    comp_id[w] = cid
                    members.append(w)
                    queue.append(w)
        comps.append(frozenset(members))
    return comp_id, comps


def legal_forces(g: Graph, black: Iterable[int], rule: Rule) -> list[tuple[int, int, frozenset[int] | None]]:
    """Every force ``(u, w, component)`` legal against the black set, sorted by ``(u, w)``."""
    is_black = [False] * g.n
    for v in black:
        is_black[v] = True
    out = []
    if rule is Rule.STANDARD:
        for u in range(g.n):
            if is_black[u]:
                whites = [w for w in g.adj[u] if not is_black[w]]
                if len(whites) == 1:
                    out.append((u, whites[0], None))
        return out
    comp_id, comps = white_components(g, is_black)
    for u in range(g.n):
        if not is_black[u]:
            continue
        by_comp: dict[int, list[int]] = {}
        for w in g.adj[u]:
            if not is_black[w]:
                by_comp.setdefault(comp_id[w], []).append(w)
        for cid, ws in by_comp.items():
            if len(ws) == 1:
                out.append((u, ws[0], comps[cid]))
    out.sort(key=lambda f: (f[0], f[1]))
    return out


def _white_component_of(g: Graph, v: int, is_black: Sequence[bool]) -> set[int]:
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not is_black[w] and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def derived_set(
    g: Graph,
    initial: Iterable[int],
    rule: Rule = Rule.STANDARD,
    schedule: Schedule = "eager",
) -> tuple[frozenset[int], ForcingTrace]:
    """Run a forcing process and return the final black set with its trace.

    ``schedule="eager"`` repeatedly applies the first legal force, scanning
    forcers in id order (then targets in id order) until none remains, so
    the final set is the derived set.  A sequence of events (or ``(u, v)``
    pairs) is replayed verbatim instead; an illegal event raises
    :class:`TraceInvalidError` and the final set is whatever the script reached.
    """
    rule = Rule(rule)
    init = frozenset(initial)
    for v in init:
        if not 0 <= v < g.n:
            raise PreconditionError(f"initial vertex {v} outside the graph")
    is_black = [False] * g.n
    for v in init:
        is_black[v] = True
    events: list[ForceEvent] = []

    if isinstance(schedule, str):
        if schedule != "eager":
            raise ValueError(f"unknown schedule {schedule!r}")
        while True:
            forces = legal_forces(g, (v for v in range(g.n) if is_black[v]), rule)
            if not forces:
                break
            u, w, comp = forces[0]
            is_black[w] = True
            events.append(ForceEvent(u, w, len(events), comp))
    else:
        for step, ev in enumerate(schedule):
            u, v = (ev.forcer, ev.forced) if isinstance(ev, ForceEvent) else ev
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise TraceInvalidError(step, f"vertex outside the graph in {u} -> {v}")
            if not is_black[u]:
                raise TraceInvalidError(step, f"forcer {u} is not black")
            if is_black[v]:
                raise TraceInvalidError(step, f"target {v} is already black")
            if v not in g.adj[u]:
                raise TraceInvalidError(step, f"{u} and {v} are not adjacent")
            comp = None
            if rule is Rule.STANDARD:
                whites = [w for w in g.adj[u] if not is_black[w]]
            else:
                comp = _white_component_of(g, v, is_black)
                whites = [w for w in g.adj[u] if w in comp]
                comp = frozenset(comp)
            if len(whites) != 1:
                where = "" if rule is Rule.STANDARD else " in the target's component"
                raise TraceInvalidError(step, f"{u} has {len(whites)} white neighbours{where}")
            is_black[v] = True
            events.append(ForceEvent(u, v, step, comp))
    final = frozenset(v for v in range(g.n) if is_black[v])
    return final, ForcingTrace(init, tuple(events), rule)


def closure_mask(g: Graph, black: int, rule: Rule, forcers: int = -1) -> int:
    """Derived set as a bitmask, applying all currently legal forces per round.

    Only black vertices in the ``forcers`` mask may force (default: all).
    """
    masks = g.masks
    full = (1 << g.n) - 1
    while True:
        white = full & ~black
        if not white:
            return black
        new = 0
        if rule is Rule.STANDARD:
            b = black & forcers
            while b:
                low = b & -b
                u = low.bit_length() - 1
                b ^= low
                w = masks[u] & white
                if w and not w & (w - 1):
                    new |= w
        else:
            comps = []
            rest = white
            while rest:
                comp = rest & -rest
                frontier = comp
                while frontier:
                    grow = 0
                    f = frontier
                    while f:
                        low = f & -f
                        grow |= masks[low.bit_length() - 1]
                        f ^= low
                    frontier = grow & rest & ~comp
                    comp |= frontier
                comps.append(comp)
                rest &= ~comp
            b = black & forcers
            while b:
                low = b & -b
                u = low.bit_length() - 1
                b ^= low
                nw = masks[u] & white
                if not nw:
                    continue
                for comp in comps:
                    w = nw & comp
                    if w and not w & (w - 1):
                        new |= w
        if not new:
            return black
        black |= new


def is_forcing_set(g: Graph, b: Iterable[int], rule: Rule = Rule.STANDARD) -> bool:
    mask = 0
    for v in b:
        mask |= 1 << v
    return closure_mask(g, mask, Rule(rule)) == (1 << g.n) - 1


def forcing_trees(g: Graph, trace: ForcingTrace) -> TreeCover:
    """One rooted tree per initial vertex; edges join each forcer to what it forced.

    The trace is replayed first; an illegal or incomplete trace raises.
    """
    final, _ = derived_set(g, trace.initial, trace.rule, trace.events)
    if len(final) != g.n:
        raise PreconditionError(f"trace leaves {g.n - len(final)} vertices white")
    root = {v: v for v in trace.initial}
    members: dict[int, set[int]] = {v: {v} for v in trace.initial}
    edges: dict[int, set[tuple[int, int]]] = {v: set() for v in trace.initial}
    for ev in trace.events:
        r = root[ev.forcer]
        root[ev.forced] = r
        members[r].add(ev.forced)
        edges[r].add(edge_key(ev.forcer, ev.forced))
    return TreeCover(tuple(Tree(r, frozenset(members[r]), frozenset(edges[r])) for r in sorted(members)))


def tree_cover_problem(g: Graph, cover: TreeCover) -> str | None:
    """First violated tree-cover invariant as a message, or ``None`` if valid."""
    seen: set[int] = set()
    for idx, t in enumerate(cover.trees):
        if t.root not in t.vertices:
            return f"tree {idx}: root {t.root} not among its vertices"
        if seen & t.vertices:
            return f"tree {idx} overlaps an earlier tree at {sorted(seen & t.vertices)}"
        seen |= t.vertices
        for u, v in t.edges:
            if u not in t.vertices or v not in t.vertices:
                return f"tree {idx}: edge ({u}, {v}) leaves the tree"
            if not g.has_edge(u, v):
                return f"tree {idx}: ({u}, {v}) is not an edge of the graph"
        if len(t.edges) != len(t.vertices) - 1:
            return f"tree {idx}: {len(t.edges)} edges on {len(t.vertices)} vertices"
        adj: dict[int, list[int]] = {v: [] for v in t.vertices}
        for u, v in t.edges:
            adj[u].append(v)
            adj[v].append(u)
        reach = {t.root}
        queue = deque([t.root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in reach:
                    reach.add(w)
                    queue.append(w)
        if len(reach) != len(t.vertices):
            return f"tree {idx} is disconnected"
        induced = sum(len(g.adj[v] & t.vertices) for v in t.vertices) // 2
        if induced != len(t.edges):
            return f"tree {idx} is not induced ({induced} graph edges among its vertices)"
    if len(seen) != g.n or any(not 0 <= v < g.n for v in seen):
        return f"trees cover {len(seen)} of {g.n} vertices"
    return None


def validate_tree_cover(g: Graph, cover: TreeCover) -> bool:
    return tree_cover_problem(g, cover) is None
