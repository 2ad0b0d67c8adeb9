"""Graph generators: named families, random chordal/cubic graphs, exhaustive enumerators."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Any, NamedTuple, Sequence

from .errors import InvalidParameterError
from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def prism(k: int = 3) -> Graph:
    """C_k x K_2; ``prism(3)`` is the 3-prism, a 6-vertex cubic graph."""
    if k < 3:
        raise InvalidParameterError("prism needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def fig1_unicyclic(k: int) -> Graph:
    """The unicyclic graph G_k: hub 0 joined to 1..k, plus the edge {k-1, k}.

    Vertex ``i`` is v_i.  Z(G_k) = k - 2 while Z+(G_k) = 2.
    """
    if k < 4:
        raise InvalidParameterError("fig1_unicyclic needs k >= 4")
    edges = [(0, i) for i in range(1, k + 1)] + [(k - 1, k)]
    return Graph(k + 1, edges)


class CliqueCycle(NamedTuple):
    graph: Graph
    cliques: tuple[frozenset[int], ...]
    private_x: int | None  # a vertex of the first clique in no other clique
    private_y: int | None  # likewise for the last clique


def cycle_of_cliques(sizes: Sequence[int], overlap: int = 1) -> CliqueCycle:
    """Cliques C_0..C_{k-1} where only cyclically consecutive cliques meet.

    Consecutive cliques share exactly ``overlap`` vertices; clique ``i``
    gets ``sizes[i] - 2*overlap`` vertices of its own.  Chordality is not
    implied (for k >= 4 the shared vertices carry an induced cycle).
    """
    k = len(sizes)
    if k < 3:
        raise InvalidParameterError("a cycle of cliques needs at least 3 cliques")
    if overlap < 1:
        raise InvalidParameterError("consecutive cliques must share at least one vertex")
    own = [s - 2 * overlap for s in sizes]
    if min(own) < 0:
        raise InvalidParameterError(f"every clique needs at least {2 * overlap} vertices")
    nxt_id = 0
    private: list[list[int]] = []
    shared: list[list[int]] = []
    for i in range(k):
        private.append(list(range(nxt_id, nxt_id + own[i])))
        nxt_id += own[i]
        shared.append(list(range(nxt_id, nxt_id + overlap)))
        nxt_id += overlap
    cliques = tuple(frozenset(shared[i - 1] + private[i] + shared[i]) for i in range(k))
    edges = set()
    for c in cliques:
        edges.update(combinations(sorted(c), 2))
    g = Graph(nxt_id, edges)
    for c in cliques:
        common = set.intersection(*(set(g.adj[v]) for v in c)) - c
        if common:
            raise InvalidParameterError("listed cliques are not maximal (k=3 with no private vertices?)")
    return CliqueCycle(
        g,
        cliques,
        private[0][0] if private[0] else None,
        private[-1][0] if private[-1] else None,
    )


def random_chordal(n: int, density: float, seed: int | None = None, *, max_edges: int | None = None) -> Graph:
    """Connected random chordal graph grown by simplicial extension.

    Each new vertex picks a random earlier vertex ``u`` and joins ``u``
    plus each member of the clique ``u`` was created with, independently
    with probability ``density``.  That neighbourhood is a clique, so
    reversed creation order is a perfect elimination ordering.  Growth
    stops early once ``max_edges`` is reached.
    """
    if n < 1:
        raise InvalidParameterError("random_chordal needs n >= 1")
    if not 0.0 <= density <= 1.0:
        raise InvalidParameterError("density must lie in [0, 1]")
    rng = random.Random(seed)
    born: list[list[int]] = [[0]]
    adj: list[list[int]] = [[]]
    m = 0
    for v in range(1, n):
        if max_edges is not None and m >= max_edges:
            break
        u = rng.randrange(v)
        nbrs = [u] + [w for w in born[u] if w != u and rng.random() < density]
        born.append(nbrs + [v])
        adj.append(nbrs)
        for w in nbrs:
            adj[w].append(v)
        m += len(nbrs)
    return Graph.from_adjacency(adj)


def random_cubic(n: int, seed: int | None = None) -> Graph:
    """Uniform-ish random simple 3-regular graph by the pairing model with restarts."""
    if n < 4 or n % 2:
        raise InvalidParameterError("cubic graphs need an even n >= 4")
    rng = random.Random(seed)
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, edges)


def random_connected(n: int, p: float, seed: int | None = None) -> Graph:
    """G(n, p) conditioned on connectivity (rejection sampling)."""
    if n < 1 or not 0.0 <= p <= 1.0 or (n > 1 and p == 0.0):
        raise InvalidParameterError("random_connected needs n >= 1 and 0 < p <= 1")
    rng = random.Random(seed)
    while True:
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if g.is_connected():
            return g


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    import networkx as nx

    buckets: dict[Any, list[tuple[Graph, Any]]] = {}
    out = []
    for g in graphs:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        key = (tuple(sorted(len(a) for a in g.adj)), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for _, other in bucket):
            continue
        bucket.append((g, h))
        out.append(g)
    return out


def _extend(g: Graph, nbrs: Sequence[int]) -> Graph:
    adj = [set(a) for a in g.adj] + [set(nbrs)]
    for w in nbrs:
        adj[w].add(g.n)
    return Graph.from_adjacency(adj)


@lru_cache(maxsize=None)
def _connected(n: int, chordal: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    out = []
    for g in _connected(n - 1, chordal):
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                if chordal and any(b not in g.adj[a] for a, b in combinations(nbrs, 2)):
                    continue
                out.append(_extend(g, nbrs))
    return tuple(_dedupe(out))


def all_connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices.

    Built by attaching a new vertex to every non-empty subset of a smaller
    connected graph (every connected graph has a non-cut vertex).  Practical
    up to n = 7; n = 8 takes minutes.
    """
    if not 1 <= n <= 8:
        raise InvalidParameterError("exhaustive enumeration supports 1 <= n <= 8")
    return list(_connected(n, False))


def all_connected_chordal_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected chordal graphs on ``n`` vertices.

    Grown by simplicial extension: the new vertex is joined to a non-empty
    clique, and every connected chordal graph arises this way.
    """
    if not 1 <= n <= 8:
        raise InvalidParameterError("exhaustive enumeration supports 1 <= n <= 8")
    return list(_connected(n, True))


_KINDS = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "prism": prism,
    "fig1_unicyclic": fig1_unicyclic,
    "cycle_of_cliques": lambda sizes, overlap=1: cycle_of_cliques(sizes, overlap).graph,
    "random_chordal": random_chordal,
    "random_cubic": random_cubic,
    "random_connected": random_connected,
}
_SEEDED = {"random_chordal", "random_cubic", "random_connected"}


def generate(kind: str, params: dict[str, Any] | Sequence[Any] = (), seed: int | None = None) -> Graph:
    """Dispatch to a named generator; ``seed`` only matters for random kinds."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise InvalidParameterError(f"unknown graph kind {kind!r}; choose from {sorted(_KINDS)}") from None
    kwargs = dict(params) if isinstance(params, dict) else {}
    args = list(params) if not isinstance(params, dict) else []
    if kind in _SEEDED:
        kwargs["seed"] = seed
    try:
        return fn(*args, **kwargs)
    except TypeError as exc:
        raise InvalidParameterError(f"bad parameters for {kind}: {exc}") from None
