"""Two six-vertex chordal graphs where critical pairs and one-tree optimal covers disagree.

In the first, {0, 1} forces everything with a single non-trivial tree, yet
the clique {0, 1, 4} has no pair that every neighbouring clique meets once.
In the second every clique has such a pair, but an optimal one-tree cover
would need an induced tree on five vertices, i.e. a vertex of degree five.
"""

from zeroforce.exact import brute_zplus, min_forest_decision
from zeroforce.graph import Graph
from zeroforce.reductions import critical_pairs, pair_candidates

cases = {
    "one-tree cover, no pairs": Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (3, 5)]),
    "pairs, no one-tree cover": Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (3, 5)]),
}
for name, g in cases.items():
    cliques, cands = pair_candidates(g)
    zp = brute_zplus(g)
    ok, w = min_forest_decision(g, zp, 1)
    print(name)
    for c, pairs in zip(cliques, cands):
        print(f"  clique {sorted(c)}: critical pairs {pairs}")
    print(f"  Z+ = {zp}; critical_pairs -> {critical_pairs(g) is not None}; one-tree cover -> {ok}")
    if ok:
        print(f"  witness trees {[sorted(t.vertices) for t in w.cover]}")
