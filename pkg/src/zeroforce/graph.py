"""Simple undirected graphs and chordality machinery.

Vertices are the dense integers ``0..n-1``; optional labels are only used
for I/O.  Everything in here runs in time linear in ``n + m`` except the
convenience helpers explicitly documented otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidOrderingError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Edge list.  Repeated edges are merged; loops are rejected.
    labels : sequence of str, optional
        Cosmetic vertex names, one per vertex.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if labels is not None and len(labels) != n:
            raise ValueError("need exactly one label per vertex")
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]], labels: Sequence[str] | None = None) -> "Graph":
        """Build from a per-vertex neighbour collection (must already be symmetric)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(frozenset(a) for a in adj)
        g.labels = tuple(labels) if labels is not None else None
        for v, nbrs in enumerate(g.adj):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for w in nbrs:
                if v not in g.adj[w]:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {w})")
        return g

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def sorted_adj(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(a)) for a in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks; used by the exponential oracles."""
        out = []
        for nbrs in self.adj:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    def edges(self) -> Iterator[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in self.sorted_adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; also returns new-id -> old-id."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u in old for v in self.adj[u] if v in index and u < v]
        return Graph(len(old), edges), old

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of the vertex ids, tagged with how it was produced.

    ``kind`` is one of ``"arbitrary"``, ``"lex-bfs"`` or ``"peo"``.  For a
    ``"peo"`` ordering ``order[0]`` is eliminated first.
    """

    order: tuple[int, ...]
    kind: str = "arbitrary"

    def __post_init__(self):
        if self.kind not in ("arbitrary", "lex-bfs", "peo"):
            raise ValueError(f"unknown ordering kind {self.kind!r}")
        n = len(self.order)
        seen = [False] * n
        for v in self.order:
            if not 0 <= v < n or seen[v]:
                raise InvalidOrderingError("ordering is not a permutation of 0..n-1")
            seen[v] = True

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def reversed(self, kind: str = "arbitrary") -> "VertexOrdering":
        return VertexOrdering(tuple(reversed(self.order)), kind)

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


@dataclass(frozen=True)
class CliqueCover:
    """A family of cliques; valid when every edge lies in one of them."""

    cliques: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def is_valid(self, g: Graph) -> bool:
        for c in self.cliques:
            for u in c:
                if not c - {u} <= g.adj[u]:
                    return False
        covered = set()
        for c in self.cliques:
            cs = sorted(c)
            for i, u in enumerate(cs):
                for v in cs[i + 1:]:
                    covered.add((u, v))
        return all(e in covered for e in g.edges())


def lex_bfs(g: Graph) -> VertexOrdering:
    """Lexicographic breadth-first search by partition refinement.

    Ties between vertices with equal labels go to the smallest id, so the
    result is fully deterministic.  Disconnected graphs are accepted: when a
    component is exhausted the search restarts at the smallest unvisited id.
    If ``g`` is chordal the reverse of the returned order is a perfect
    elimination ordering.
    """
    n = g.n
    sadj = g.sorted_adj
    # cells are doubly linked (cnext/cprev); members of a cell are a doubly
    # linked list (nxt/prv) kept in increasing id order
    head, tail, cnext, cprev = [0], [n - 1], [-1], [-1]
    nxt = list(range(1, n)) + [-1]
    prv = list(range(-1, n - 1))
    cell_of = [0] * n
    visited = [False] * n
    first = 0 if n else -1
    order = []

    def detach(w: int, c: int) -> None:
        nonlocal first
        p, q = prv[w], nxt[w]
        if p == -1:
            head[c] = q
        else:
            nxt[p] = q
        if q == -1:
            tail[c] = p
        else:
            prv[q] = p
        if head[c] == -1:
            cp, cn = cprev[c], cnext[c]
            if cp == -1:
                first = cn
            else:
                cnext[cp] = cn
            if cn != -1:
                cprev[cn] = cp

    for _ in range(n):
        c = first
        v = head[c]
        detach(v, c)
        visited[v] = True
        order.append(v)
        split: dict[int, int] = {}
        for w in sadj[v]:
            if visited[w]:
                continue
            c = cell_of[w]
            nc = split.get(c)
            if nc is None:
                nc = len(head)
                split[c] = nc
                head.append(-1)
                tail.append(-1)
                cp = cprev[c]
                cprev.append(cp)
                cnext.append(c)
                if cp == -1:
                    first = nc
                else:
                    cnext[cp] = nc
                cprev[c] = nc
            detach(w, c)
            t = tail[nc]
            prv[w] = t
            nxt[w] = -1
            if t == -1:
                head[nc] = w
            else:
                nxt[t] = w
            tail[nc] = w
            cell_of[w] = nc
    return VertexOrdering(tuple(order), "lex-bfs")


def is_simplicial(g: Graph, v: int, within: frozenset[int] | set[int] | None = None) -> bool:
    """True iff the neighbours of ``v`` (restricted to ``within`` if given) form a clique."""
    nbrs = g.adj[v] if within is None else g.adj[v] & within
    for u in nbrs:
        if len(nbrs - g.adj[u]) != 1:
            return False
    return True


def is_peo(g: Graph, ordering: VertexOrdering | Sequence[int]) -> bool:
    """Check that every ``ordering[i]`` is simplicial among ``ordering[i:]``.

    Uses the parent test: with ``p`` the earliest later neighbour of ``v``,
    all other later neighbours of ``v`` must be adjacent to ``p``.
    """
    order = ordering.order if isinstance(ordering, VertexOrdering) else tuple(ordering)
    if len(order) != g.n:
        raise InvalidOrderingError(f"ordering has {len(order)} entries, graph has {g.n} vertices")
    if not isinstance(ordering, VertexOrdering):
        VertexOrdering(order)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = g.adj
    for v in order:
        pv = pos[v]
        later = [w for w in adj[v] if pos[w] > pv]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        ap = adj[p]
        for w in later:
            if w != p and w not in ap:
                return False
    return True


def perfect_elimination_ordering(g: Graph) -> VertexOrdering | None:
    """Reverse Lex-BFS order if it is a PEO, else ``None`` (graph not chordal)."""
    peo = lex_bfs(g).reversed("arbitrary")
    if not is_peo(g, peo):
        return None
    return VertexOrdering(peo.order, "peo")


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by smallest vertex."""
    gone = [False] * g.n
    for v in removed:
        gone[v] = True
    out = []
    for s in range(g.n):
        if gone[s]:
            continue
        gone[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not gone[w]:
                    gone[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def maximal_cliques_chordal(g: Graph, peo: VertexOrdering | Sequence[int]) -> CliqueCover:
    """All maximal cliques of a chordal graph from a perfect elimination ordering.

    The candidate for ``v`` is ``v`` plus its later neighbours; it is dropped
    when some vertex whose parent is ``v`` has a strictly larger candidate
    (which then contains it).  Cliques are reported in PEO order.
    """
    if not is_peo(g, peo):
        raise InvalidOrderingError("ordering is not a perfect elimination ordering")
    order = peo.order if isinstance(peo, VertexOrdering) else tuple(peo)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [[w for w in g.adj[v] if pos[w] > pos[v]] for v in range(g.n)]
    dominated = [False] * g.n
    for v in order:
        lv = later[v]
        if lv:
            p = min(lv, key=pos.__getitem__)
            if len(later[p]) + 1 == len(lv):
                dominated[p] = True
    return CliqueCover(tuple(frozenset([v, *later[v]]) for v in order if not dominated[v]))
