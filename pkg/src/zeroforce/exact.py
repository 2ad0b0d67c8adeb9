"""Exponential brute-force oracles.

These are the ground truth for the test-suite.  Each takes a ``cap`` on the
number of vertices and raises :class:`CapExceededError` above it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError, InvalidParameterError
from .forcing import ForceEvent, ForcingTrace, Rule, TreeCover, closure_mask, forcing_trees, legal_forces
from .graph import Graph


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(f"{what}: n = {g.n} exceeds cap {cap}")


def _min_forcing(g: Graph, rule: Rule, cap: int) -> tuple[int, frozenset[int]]:
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if closure_mask(g, mask, rule) == full:
                return size, frozenset(combo)
    raise AssertionError("V(G) is always a forcing set")


def brute_z(g: Graph, cap: int = 20) -> int:
    """Zero forcing number by ascending subset search."""
    _check_cap(g, cap, "brute_z")
    return _min_forcing(g, Rule.STANDARD, cap)[0]


def brute_zplus(g: Graph, cap: int = 20) -> int:
    """Positive zero forcing number by ascending subset search."""
    _check_cap(g, cap, "brute_zplus")
    return _min_forcing(g, Rule.POSITIVE, cap)[0]


def min_forcing_set(g: Graph, rule: Rule | str = Rule.STANDARD, cap: int = 20) -> frozenset[int]:
    """Lexicographically first minimum forcing set."""
    _check_cap(g, cap, "min_forcing_set")
    return _min_forcing(g, Rule(rule), cap)[1]


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch via networkx), sorted."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return sorted((frozenset(c) for c in nx.find_cliques(h)), key=sorted)


def brute_cc_witness(g: Graph, cap: int = 24) -> list[frozenset[int]]:
    """A minimum edge clique cover drawn from the maximal cliques.

    Branch and bound: pick the uncovered edge lying in the fewest candidate
    cliques and branch over those cliques.
    """
    _check_cap(g, cap, "brute_cc")
    edges = list(g.edges())
    if not edges:
        return []
    index = {e: i for i, e in enumerate(edges)}
    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    cover_mask = []
    for c in cliques:
        mask = 0
        for e in combinations(sorted(c), 2):
            mask |= 1 << index[e]
        cover_mask.append(mask)
    by_edge = [[j for j, cm in enumerate(cover_mask) if cm >> i & 1] for i in range(len(edges))]
    full = (1 << len(edges)) - 1
    biggest = max(bin(cm).count("1") for cm in cover_mask)
    best: list[int] = list(range(len(cliques)))

    def search(covered: int, chosen: list[int]) -> None:
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = chosen.copy()
            return
        remaining = bin(full & ~covered).count("1")
        if len(chosen) + -(-remaining // biggest) >= len(best):
            return
        pick = min(
            (i for i in range(len(edges)) if not covered >> i & 1),
            key=lambda i: len(by_edge[i]),
        )
        for j in by_edge[pick]:
            chosen.append(j)
            search(covered | cover_mask[j], chosen)
            chosen.pop()

    search(0, [])
    return [cliques[j] for j in best]


def brute_cc(g: Graph, cap: int = 24) -> int:
    """Edge clique cover number cc(G)."""
    return len(brute_cc_witness(g, cap))


def _induced_tree_masks(g: Graph) -> list[bool]:
    n = g.n
    masks = g.masks
    ok = [False] * (1 << n)
    for s in range(1, 1 << n):
        size = bin(s).count("1")
        edges = 0
        b = s
        while b:
            low = b & -b
            edges += bin(masks[low.bit_length() - 1] & s).count("1")
            b ^= low
        if edges // 2 != size - 1:
            continue
        seen = s & -s
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= masks[low.bit_length() - 1]
                f ^= low
            frontier = grow & s & ~seen
            seen |= frontier
        ok[s] = seen == s
    return ok


def brute_tree_cover_number(g: Graph, cap: int = 12) -> int:
    """T(G): fewest vertex-disjoint induced trees covering V (subset DP)."""
    _check_cap(g, cap, "brute_tree_cover_number")
    if g.n == 0:
        return 0
    is_tree = _induced_tree_masks(g)
    full = (1 << g.n) - 1
    best = [0] * (1 << g.n)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        val = g.n
        sub = rest
        while True:
            part = sub | low
            if is_tree[part]:
                cand = 1 + best[s ^ part]
                if cand < val:
                    val = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = val
    return best[full]


def brute_min_vertex_cover(g: Graph, cap: int = 40) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover by branching on a maximum-degree vertex.

    Either that vertex is in the cover, or all of its neighbours are.
    """
    _check_cap(g, cap, "brute_min_vertex_cover")
    adj = [set(a) for a in g.adj]
    best: list = [g.n + 1, frozenset(range(g.n))]

    def search(alive: frozenset[int], chosen: frozenset[int]) -> None:
        deg = {v: len(adj[v] & alive) for v in alive}
        v = max(alive, key=lambda x: (deg[x], -x), default=None)
        if v is None or deg[v] == 0:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), chosen
            return
        if len(chosen) + 1 >= best[0]:
            return
        search(alive - {v}, chosen | {v})
        nbrs = adj[v] & alive
        if len(chosen) + len(nbrs) < best[0]:
            search(alive - nbrs - {v}, chosen | nbrs)

    search(frozenset(range(g.n)), frozenset())
    return best[0], best[1]


@dataclass(frozen=True)
class MinForestWitness:
    forcing_set: frozenset[int]
    trace: ForcingTrace
    cover: TreeCover
    nontrivial_count: int


def _restricted_trace(g: Graph, initial: frozenset[int], active: frozenset[int]) -> ForcingTrace:
    """Eager positive trace in which only ``active`` initial vertices may force."""
    black = set(initial)
    events = []
    while True:
        move = next(
            ((u, w, c) for u, w, c in legal_forces(g, black, Rule.POSITIVE) if u not in initial or u in active),
            None,
        )
        if move is None:
            break
        u, w, comp = move
        black.add(w)
        events.append(ForceEvent(u, w, len(events), comp))
    return ForcingTrace(initial, tuple(events), Rule.POSITIVE)


def min_forest_decision(g: Graph, ell: int, k: int, cap: int = 20) -> tuple[bool, MinForestWitness | None]:
    """Does ``g`` have a positive zero forcing tree cover of size ``ell`` with at most ``k`` non-trivial trees?

    A tree is non-trivial exactly when its root performs a force.  Forces
    are monotone in the black set, so once a set ``A`` of roots is allowed
    to force, every force by ``A`` or by a non-root can be applied greedily
    without loss.  The question for a candidate set ``B`` therefore reduces
    to: is there ``A`` within ``B`` with ``|A| = min(k, ell)`` whose restricted
    closure is all of V?  Candidates are tried in lexicographic order and
    the first success is returned as the witness.
    """
    _check_cap(g, cap, "min_forest_decision")
    if ell < 0 or k < 0:
        raise InvalidParameterError("ell and k must be non-negative")
    if ell > g.n:
        return False, None
    full = (1 << g.n) - 1
    size = min(k, ell)
    for combo in combinations(range(g.n), ell):
        bmask = 0
        for v in combo:
            bmask |= 1 << v
        if closure_mask(g, bmask, Rule.POSITIVE) != full:
            continue
        nonroots = full & ~bmask
        for active in combinations(combo, size):
            amask = 0
            for v in active:
                amask |= 1 << v
            if closure_mask(g, bmask, Rule.POSITIVE, nonroots | amask) == full:
                initial = frozenset(combo)
                trace = _restricted_trace(g, initial, frozenset(active))
                cover = forcing_trees(g, trace)
                return True, MinForestWitness(initial, trace, cover, cover.nontrivial_count)
    return False, None
