"""Optimal positive zero forcing sets, tree covers and clique covers of chordal graphs.

The algorithm walks a perfect elimination ordering (reverse Lex-BFS).  At
each vertex ``v`` with clique ``C_v = {v} + later neighbours``:

* if some edge from ``v`` to a later neighbour is still uncoloured, colour
  the one to the smallest-id such neighbour black, every other uncoloured
  edge of ``C_v`` red, and ``v`` white;
* otherwise colour ``v`` black.

The black vertices form an optimal positive zero forcing set, the white
vertices' cliques an optimal clique cover, and the components left after
deleting red edges an optimal positive zero forcing tree cover.

Red-colouring the interior of ``C_v`` is deferred.  An edge ``{a, b}``
between two later neighbours of ``v`` only matters when ``a`` (the
earlier of the two) is processed, so ``C_v`` minus ``v`` travels as a
pending clique from head to head: it marks its pairs at the current head
``h``, dies when ``h`` turns white (``C_h`` then contains it), and moves
on to its next member otherwise.
"""

from __future__ import annotations

import gc
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

from .errors import NotChordalError
from .forcing import ForceEvent, ForcingTrace, Rule, Tree, TreeCover, derived_set
from .graph import CliqueCover, Edge, Graph, VertexOrdering, edge_key, perfect_elimination_ordering


@dataclass(frozen=True)
class EdgeColouring:
    """Final colours: every edge is black or red, every vertex black or white."""

    black_edges: frozenset[Edge]
    vertex_colour: tuple[str, ...]

    def colour(self, u: int, v: int) -> str:
        return "black" if edge_key(u, v) in self.black_edges else "red"

    def red_edges(self, g: Graph) -> Iterator[Edge]:
        return (e for e in g.edges() if e not in self.black_edges)

    @property
    def white_count(self) -> int:
        return sum(c == "white" for c in self.vertex_colour)


@dataclass(frozen=True)
class ZplusResult:
    graph: Graph
    black_set: frozenset[int]
    tree_cover: TreeCover
    clique_cover: CliqueCover
    colouring: EdgeColouring
    peo: VertexOrdering
    # (white vertex, other end of its black edge) in the order vertices turned white
    whitening: tuple[tuple[int, int], ...]

    @property
    def zplus(self) -> int:
        return len(self.black_set)


@contextmanager
def _gc_paused():
    # everything allocated below is acyclic; generation-2 sweeps over a large
    # heap would otherwise add a cost that grows with the graph
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def zplus_chordal(g: Graph) -> ZplusResult:
    """Run the elimination colouring on a chordal graph in O(n + m) for bounded cliques.

    Disconnected graphs are handled in one pass: the last vertex of every
    component has no later neighbours and is coloured black.

    Raises
    ------
    NotChordalError
        If reverse Lex-BFS is not a perfect elimination ordering.
    """
    with _gc_paused():
        return _zplus(g)


def _zplus(g: Graph) -> ZplusResult:
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise NotChordalError("graph is not chordal (reverse Lex-BFS is not a perfect elimination ordering)")
    n = g.n
    order = peo.order
    pos = peo.positions()
    # later neighbours, each list sorted by elimination position
    later: list[list[int]] = [[] for _ in range(n)]
    adj = g.adj
    for x in order:
        px = pos[x]
        for w in adj[x]:
            if pos[w] < px:
                later[w].append(x)

    pending: list[list | None] = [None] * n
    white = [False] * n
    whitening = []
    for v in order:
        lv = later[v]
        queue = pending[v]
        pending[v] = None
        if queue:
            covered = set()
            for clique, i in queue:
                covered.update(clique[i + 1:])
            uncovered = [b for b in lv if b not in covered]
        else:
            uncovered = lv
        if uncovered:
            white[v] = True
            whitening.append((v, min(uncovered)))
            if len(lv) >= 2:
                head = lv[0]
                if pending[head] is None:
                    pending[head] = []
                pending[head].append((lv, 0))
        elif queue:
            for clique, i in queue:
                if len(clique) - i >= 3:
                    head = clique[i + 1]
                    if pending[head] is None:
                        pending[head] = []
                    pending[head].append((clique, i + 1))

    black_edges = frozenset(edge_key(w, b) for w, b in whitening)
    vertex_colour = tuple("white" if white[v] else "black" for v in range(n))
    black_set = frozenset(v for v in range(n) if not white[v])
    cliques = CliqueCover(tuple(frozenset([w, *later[w]]) for w, _ in whitening))
    return ZplusResult(
        graph=g,
        black_set=black_set,
        tree_cover=_trees_from_black_edges(n, whitening, white, include_isolated=True),
        clique_cover=cliques,
        colouring=EdgeColouring(black_edges, vertex_colour),
        peo=peo,
        whitening=tuple(whitening),
    )


def _trees_from_black_edges(n: int, whitening, white, include_isolated: bool) -> TreeCover:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for w, b in whitening:
        nbrs[w].append(b)
        nbrs[b].append(w)
    seen = [False] * n
    trees = []
    for s in range(n):
        if seen[s] or (not nbrs[s] and not include_isolated):
            continue
        seen[s] = True
        members = [s]
        edges = []
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    edges.append(edge_key(u, w))
                    queue.append(w)
        blacks = [v for v in members if not white[v]]
        root = min(blacks) if blacks else min(members)
        trees.append(Tree(root, frozenset(members), frozenset(edges)))
    trees.sort(key=lambda t: t.root)
    return TreeCover(tuple(trees))


def t_black(result: ZplusResult) -> TreeCover:
    """Components of the subgraph formed by the black edges (isolated vertices excluded).

    Each component is rooted at its black vertex.
    """
    white = [c == "white" for c in result.colouring.vertex_colour]
    return _trees_from_black_edges(result.graph.n, result.whitening, white, include_isolated=False)


def t_black_properties(result: ZplusResult) -> dict[str, bool]:
    """Check the four structural properties of the black-edge subgraph directly.

    ``forest``: no cycle among black edges; ``contains_all_white``: every
    white vertex is an endpoint of a black edge; ``one_black_per_component``;
    ``induced``: no graph edge joins two vertices of a component other than
    its black edges.
    """
    g = result.graph
    white = [c == "white" for c in result.colouring.vertex_colour]
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest = True
    touched = set()
    for u, v in result.colouring.black_edges:
        touched.update((u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            forest = False
        else:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in touched:
        groups.setdefault(find(v), set()).add(v)
    edge_count: dict[int, int] = {}
    for u, v in result.colouring.black_edges:
        r = find(u)
        edge_count[r] = edge_count.get(r, 0) + 1
    one_black = all(sum(not white[v] for v in vs) == 1 for vs in groups.values())
    induced = all(
        sum(len(g.adj[v] & vs) for v in vs) // 2 == edge_count.get(r, 0) for r, vs in groups.items()
    )
    contains_white = all(v in touched for v in range(g.n) if white[v])
    return {
        "forest": forest,
        "contains_all_white": contains_white,
        "one_black_per_component": one_black,
        "induced": induced,
    }


def forcing_process_from_result(g: Graph, result: ZplusResult, validate: bool = True) -> ForcingTrace:
    """Positive forcing trace from the black set: white vertices are forced in
    reverse order of whitening, each across its black edge.

    With ``validate`` the trace is replayed (quadratic time) and carries the
    component context of every force.
    """
    events = [ForceEvent(b, w, step) for step, (w, b) in enumerate(reversed(result.whitening))]
    if validate:
        _, trace = derived_set(g, result.black_set, Rule.POSITIVE, events)
        return trace
    return ForcingTrace(result.black_set, tuple(events), Rule.POSITIVE)
