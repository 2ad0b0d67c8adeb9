"""Constructive tools around tree covers with few non-trivial trees.

* the split-graph gadget turning a cubic graph into a Min-Forest instance,
  with witness maps in both directions;
* critical pairs of maximal cliques and the single-tree cover they induce;
* optimal sets from an induced tree with ``|V(T)| - 1 = cc(G)``;
* forcing sets for cycles of cliques.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParameterError, NotChordalError, PreconditionError
from .exact import MinForestWitness, brute_cc
from .forcing import ForceEvent, ForcingTrace, Rule, Tree, TreeCover, derived_set, forcing_trees, tree_cover_problem
from .graph import Graph, edge_key, maximal_cliques_chordal, perfect_elimination_ordering


@dataclass(frozen=True)
class ReductionInstance:
    """Split graph built from a cubic graph ``h``.

    Vertex numbering: ``v'_i = i``, ``e'_j = n + j`` (edges of ``h`` in
    lexicographic order), then ``x1``, ``x2``, ``y`` and, for the echinus
    variant, ``y'`` and ``y''``.
    """

    g: Graph
    h: Graph
    variant: str
    v_map: tuple[int, ...]
    e_map: dict[tuple[int, int], int]
    specials: dict[str, int]

    @property
    def ell(self) -> int:
        """Tree-cover size used by the reduction (``n + 1``)."""
        return self.h.n + 1

    @property
    def clique(self) -> frozenset[int]:
        return frozenset(self.v_map) | {self.specials["x1"], self.specials["x2"]}


def build_minforest_instance(h: Graph, variant: str = "split") -> ReductionInstance:
    """Clique on ``v'_1..v'_n, x1, x2``; each ``e'`` joined to its two endpoints; ``y`` to ``x1, x2``.

    The echinus variant adds ``y'`` and ``y''``, each joined to both ``x1``
    and ``x2`` so that every independent vertex has two clique neighbours
    and every clique vertex three independent ones.
    """
    if variant not in ("split", "echinus"):
        raise InvalidParameterError(f"unknown variant {variant!r}")
    if h.n == 0 or any(len(a) != 3 for a in h.adj):
        raise PreconditionError("reduction input must be a cubic graph")
    n = h.n
    hedges = list(h.edges())
    m = len(hedges)
    x1, x2, y = n + m, n + m + 1, n + m + 2
    specials = {"x1": x1, "x2": x2, "y": y}
    labels = [f"v{i}'" for i in range(n)] + [f"e{j}'" for j in range(m)] + ["x1", "x2", "y"]
    edges = list(combinations(list(range(n)) + [x1, x2], 2))
    for j, (a, b) in enumerate(hedges):
        edges += [(n + j, a), (n + j, b)]
    edges += [(y, x1), (y, x2)]
    total = n + m + 3
    if variant == "echinus":
        specials.update({"y'": total, "y''": total + 1})
        labels += ["y'", "y''"]
        edges += [(total, x1), (total, x2), (total + 1, x1), (total + 1, x2)]
        total += 2
    g = Graph(total, edges, labels)
    return ReductionInstance(g, h, variant, tuple(range(n)), {e: n + j for j, e in enumerate(hedges)}, specials)


def _is_cover(h: Graph, u: Iterable[int]) -> bool:
    us = set(u)
    return all(a in us or b in us for a, b in h.edges())


def vc_to_cover(inst: ReductionInstance, u: Iterable[int]) -> MinForestWitness:
    """Forcing set ``{v'} + x2`` whose non-trivial trees are rooted inside the cover.

    The smallest cover vertex forces ``x1`` first, ``x1`` forces the
    ``y`` vertices, and each ``e'`` is forced by its smallest covering endpoint.
    """
    us = sorted(set(u))
    if not us or not _is_cover(inst.h, us):
        raise PreconditionError("not a vertex cover of the cubic graph")
    sp = inst.specials
    x1 = sp["x1"]
    initial = frozenset(inst.v_map) | {sp["x2"]}
    events = [(inst.v_map[us[0]], x1)]
    events += [(x1, sp[name]) for name in ("y", "y'", "y''") if name in sp]
    for (a, b), ev in inst.e_map.items():
        src = a if a in us else b
        events.append((inst.v_map[src], ev))
    final, trace = derived_set(inst.g, initial, Rule.POSITIVE, events)
    cover = forcing_trees(inst.g, trace)
    return MinForestWitness(initial, trace, cover, cover.nontrivial_count)


def classify_f1(inst: ReductionInstance, cover: TreeCover) -> int:
    """Which case of the converse argument the cover falls in.

    ``F_1`` is the tree holding two clique vertices: case 1 when both are
    ``v'`` vertices, 2 when one is ``x1`` or ``x2``, 3 when they are ``x1, x2``.
    """
    clique = inst.clique
    doubles = [t for t in cover.trees if len(t.vertices & clique) >= 2]
    if len(doubles) != 1:
        raise PreconditionError(f"{len(doubles)} trees hold two clique vertices; expected exactly one")
    inside = doubles[0].vertices & clique
    xs = inside & {inst.specials["x1"], inst.specials["x2"]}
    return 1 + len(xs)


def cover_to_vc(inst: ReductionInstance, w: MinForestWitness) -> frozenset[int]:
    """Recover a vertex cover of size at most ``w.nontrivial_count`` from a witness.

    The trace is replayed; the cover is read off as the ``v'`` vertices
    lying in non-trivial trees, which is what every case of the argument
    produces (each ``e'`` hangs off one of its endpoints).
    """
    final, trace = derived_set(inst.g, w.forcing_set, Rule.POSITIVE, w.trace.events)
    if len(final) != inst.g.n:
        raise PreconditionError("witness trace does not force the whole graph")
    if len(w.forcing_set) != inst.ell:
        raise PreconditionError(f"witness has {len(w.forcing_set)} trees, the reduction needs {inst.ell}")
    cover = forcing_trees(inst.g, trace)
    classify_f1(inst, cover)
    v_set = set(inst.v_map)
    found = frozenset(v for t in cover.trees if not t.trivial for v in t.vertices & v_set)
    result = frozenset(inst.v_map.index(v) for v in found)
    if not _is_cover(inst.h, result):
        raise PreconditionError("extracted set is not a vertex cover")
    return result


# critical pairs -------------------------------------------------------------


@dataclass(frozen=True)
class CriticalAssignment:
    cliques: tuple[frozenset[int], ...]
    pairs: tuple[tuple[int, int], ...]

    def pair_of(self, clique: frozenset[int]) -> tuple[int, int]:
        return self.pairs[self.cliques.index(clique)]


def _chordal_cliques(g: Graph) -> list[frozenset[int]]:
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise NotChordalError("critical pairs need a chordal graph")
    if not g.is_connected():
        raise PreconditionError("critical pairs need a connected graph")
    cliques = list(maximal_cliques_chordal(g, peo))
    if len(cliques) < 2:
        raise PreconditionError("graph is complete (a single maximal clique)")
    return sorted(cliques, key=sorted)


def pair_candidates(g: Graph) -> tuple[list[frozenset[int]], list[list[tuple[int, int]]]]:
    """Per maximal clique, every pair meeting each other intersecting clique exactly once."""
    cliques = _chordal_cliques(g)
    cands = []
    for i, c in enumerate(cliques):
        others = [d for j, d in enumerate(cliques) if j != i and c & d]
        cands.append([
            (x, y) for x, y in combinations(sorted(c), 2) if all((x in d) != (y in d) for d in others)
        ])
    return cliques, cands


def critical_pairs(g: Graph) -> CriticalAssignment | None:
    """A critical pair for every maximal clique, or ``None`` if some clique has none.

    The pair ``(x_C, y_C)`` of clique ``C`` is critical when every other
    maximal clique meeting ``C`` contains exactly one of the two.  Among
    all such assignments one whose critical edges form a single tree is
    preferred (intersecting cliques then share a critical vertex); it is
    found by backtracking over cliques in breadth-first order of the clique
    intersection graph.  When no such assignment exists the
    lexicographically first critical pair of each clique is returned, and
    :func:`one_tree_cover` will reject it.
    """
    cliques, cands = pair_candidates(g)
    if any(not c for c in cands):
        return None
    k = len(cliques)
    meets = [[j for j in range(k) if j != i and cliques[i] & cliques[j]] for i in range(k)]
    order, seen = [0], [True] + [False] * (k - 1)
    for i in order:
        for j in meets[i]:
            if not seen[j]:
                seen[j] = True
                order.append(j)
    chosen: list[tuple[int, int] | None] = [None] * k

    def assign(pos: int) -> bool:
        if pos == k:
            return _edges_form_tree([p for p in chosen if p is not None])
        i = order[pos]
        for pair in cands[i]:
            if all(chosen[j] is None or set(pair) & set(chosen[j]) for j in meets[i]):
                chosen[i] = pair
                if assign(pos + 1):
                    return True
                chosen[i] = None
        return False

    if not assign(0):
        chosen = [c[0] for c in cands]
    return CriticalAssignment(tuple(cliques), tuple(chosen))


def _edges_form_tree(pairs: Sequence[tuple[int, int]]) -> bool:
    edges = {edge_key(x, y) for x, y in pairs}
    verts = {v for e in edges for v in e}
    if len(edges) != len(verts) - 1:
        return False
    parent = {v: v for v in verts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _tree_from_edges(g: Graph, edges: set[tuple[int, int]], root: int | None = None) -> Tree:
    verts = {v for e in edges for v in e}
    if root is None:
        deg: dict[int, int] = {}
        for a, b in edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        root = min(v for v, d in deg.items() if d == 1) if deg else None
    return Tree(root, frozenset(verts), frozenset(edges))


def _bfs_events(tree: Tree) -> list[tuple[int, int]]:
    nbrs: dict[int, list[int]] = {v: [] for v in tree.vertices}
    for a, b in tree.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    events, seen = [], {tree.root}
    queue = deque([tree.root])
    while queue:
        u = queue.popleft()
        for w in sorted(nbrs[u]):
            if w not in seen:
                seen.add(w)
                events.append((u, w))
                queue.append(w)
    return events


def _single_tree_cover(g: Graph, tree: Tree) -> tuple[TreeCover, ForcingTrace]:
    initial = frozenset(set(range(g.n)) - tree.vertices) | {tree.root}
    final, trace = derived_set(g, initial, Rule.POSITIVE, _bfs_events(tree))
    if len(final) != g.n:
        raise PreconditionError("tree does not span its vertices")
    singles = [Tree(v, frozenset([v])) for v in sorted(initial - {tree.root})]
    cover = TreeCover(tuple(sorted([tree, *singles], key=lambda t: t.root)))
    problem = tree_cover_problem(g, cover)
    if problem:
        raise PreconditionError(problem)
    return cover, trace


def one_tree_cover(g: Graph, a: CriticalAssignment) -> tuple[TreeCover, ForcingTrace]:
    """Blacken each clique's critical edge; the union is a single induced tree ``T``.

    Starts from the smallest-id leaf of ``T`` plus every vertex outside ``T``
    and forces along ``T`` breadth-first.
    """
    for c, (x, y) in zip(a.cliques, a.pairs):
        if x not in c or y not in c or not g.has_edge(x, y):
            raise PreconditionError(f"pair ({x}, {y}) does not lie in clique {sorted(c)}")
    if not _edges_form_tree(a.pairs):
        raise PreconditionError("critical edges do not form a tree")
    tree = _tree_from_edges(g, {edge_key(x, y) for x, y in a.pairs})
    try:
        return _single_tree_cover(g, tree)
    except Exception as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise PreconditionError(f"critical edges give no valid forcing process: {exc}") from exc


def induced_tree_cover(g: Graph, t: Iterable[int], cc: int | None = None) -> tuple[frozenset[int], ForcingTrace]:
    """Optimal positive forcing set from an induced tree on ``cc(G) + 1`` vertices.

    The black set is everything outside ``t`` plus the smallest vertex of
    ``t``, and ``t`` is forced breadth-first from there.  ``cc`` defaults to
    the chordal algorithm on chordal input and the brute-force oracle otherwise.
    """
    verts = frozenset(t)
    if not verts:
        raise PreconditionError("empty tree")
    sub, old = g.induced(verts)
    if sub.m != sub.n - 1 or not sub.is_connected():
        raise PreconditionError("vertex set does not induce a tree")
    if cc is None:
        if perfect_elimination_ordering(g) is not None:
            from .zplus_chordal import zplus_chordal

            cc = len(zplus_chordal(g).clique_cover)
        else:
            cc = brute_cc(g)
    if len(verts) - 1 != cc:
        raise PreconditionError(f"tree has {len(verts)} vertices but cc(G) = {cc}")
    edges = {edge_key(old[a], old[b]) for a, b in sub.edges()}
    tree = Tree(min(verts), verts, frozenset(edges))
    cover, trace = _single_tree_cover(g, tree)
    return trace.initial, trace


# cycles of cliques ------------------------------------------------------------


def _check_cycle(g: Graph, cliques: Sequence[frozenset[int]]) -> None:
    k = len(cliques)
    if k < 3:
        raise PreconditionError("a cycle of cliques needs k >= 3")
    covered = set()
    for c in cliques:
        for a, b in combinations(sorted(c), 2):
            if not g.has_edge(a, b):
                raise PreconditionError(f"{sorted(c)} is not a clique")
            covered.add((a, b))
    if any(e not in covered for e in g.edges()):
        raise PreconditionError("cliques do not cover every edge")
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if consecutive != bool(cliques[i] & cliques[j]):
                raise PreconditionError(f"cliques {i} and {j} violate the cyclic intersection pattern")


def cycle_clique_forcing_sets(
    g: Graph,
    cliques: Sequence[Iterable[int]],
    variant: str = "standard",
) -> tuple[frozenset[int], ForcingTrace]:
    """Standard-rule forcing set with one non-trivial chain for a cycle of cliques.

    ``standard``: whiten one vertex of ``C_i & C_{i+1}`` for the first
    ``k - 2`` consecutive pairs; a vertex of ``C_k & C_1`` starts the chain.
    ``optimal``: whiten one vertex of every ``C_i & C_{i+1}`` (i < k) plus a
    private vertex ``y`` of ``C_k``; a private vertex ``x`` of ``C_1`` starts
    the chain and it ends at ``y``.
    """
    cl = [frozenset(c) for c in cliques]
    _check_cycle(g, cl)
    k = len(cl)

    def shared(i: int) -> int:
        common = cl[i] & cl[(i + 1) % k]
        exclusive = [v for v in common if sum(v in c for c in cl) == 2]
        return min(exclusive or common)

    if variant == "standard":
        whites = [shared(i) for i in range(k - 2)]
        start = shared(k - 1)
        chain = [start, *whites]
    elif variant == "optimal":
        def private(c: frozenset[int]) -> int:
            only = [v for v in c if sum(v in d for d in cl) == 1]
            if not only:
                raise PreconditionError("optimal variant needs private vertices in the first and last cliques")
            return min(only)

        x, y = private(cl[0]), private(cl[-1])
        whites = [shared(i) for i in range(k - 1)] + [y]
        chain = [x, *whites]
    else:
        raise InvalidParameterError(f"unknown variant {variant!r}")
    initial = frozenset(range(g.n)) - set(whites)
    events = [ForceEvent(a, b, i) for i, (a, b) in enumerate(zip(chain, chain[1:]))]
    final, trace = derived_set(g, initial, Rule.STANDARD, events)
    if len(final) != g.n:
        raise PreconditionError("chain does not force every vertex")
    return initial, trace


def four_clique_ring() -> tuple[Graph, tuple[int, ...]]:
    """Twelve-vertex example: four edge-disjoint K4s arranged in a cycle, and
    the five-vertex induced path b-d-h-i-f through them."""
    names = "abcdefghijkl"
    idx = {c: i for i, c in enumerate(names)}
    blocks = ["abde", "cdgh", "hikl", "efij"]
    edges = [(idx[p], idx[q]) for blk in blocks for p, q in combinations(blk, 2)]
    return Graph(12, edges, list(names)), tuple(idx[c] for c in "bdhif")
