import pytest

from zeroforce.errors import InvalidParameterError, NotChordalError, PreconditionError, TraceInvalidError
from zeroforce.exact import MinForestWitness, brute_cc, brute_z, brute_zplus, min_forest_decision
from zeroforce.forcing import Rule, Tree, TreeCover, derived_set, forcing_trees, is_forcing_set, validate_tree_cover
from zeroforce.generators import (
    all_connected_chordal_graphs,
    complete,
    complete_bipartite,
    cycle,
    cycle_of_cliques,
    path,
    prism,
    random_chordal,
    random_cubic,
)
from zeroforce.graph import Graph, is_chordal, is_peo, is_simplicial, lex_bfs
from zeroforce.reductions import (
    build_minforest_instance,
    classify_f1,
    cover_to_vc,
    critical_pairs,
    cycle_clique_forcing_sets,
    four_clique_ring,
    induced_tree_cover,
    one_tree_cover,
    vc_to_cover,
)
from zeroforce.zplus_chordal import t_black, zplus_chordal

CUBIC = {"K4": complete(4), "K33": complete_bipartite(3, 3), "prism": prism(3)}


def test_k4_instance_shape():
    inst = build_minforest_instance(complete(4))
    g = inst.g
    assert g.n == 13 and inst.ell == 5
    clique = inst.clique
    assert all(clique - {v} <= g.adj[v] for v in clique)
    independent = set(range(g.n)) - clique
    for v in independent:
        assert is_simplicial(g, v) and len(g.adj[v]) == 2
    for (a, b), ev in inst.e_map.items():
        assert g.adj[ev] == {a, b}
    assert is_peo(g, lex_bfs(g).reversed()) and g.is_connected()


def test_k33_instance_is_chordal():
    inst = build_minforest_instance(complete_bipartite(3, 3))
    assert inst.g.n == 18 and inst.ell == 7
    assert is_chordal(inst.g) and inst.g.is_connected()


@pytest.mark.parametrize("name", sorted(CUBIC))
def test_echinus_degrees(name):
    inst = build_minforest_instance(CUBIC[name], "echinus")
    g = inst.g
    clique = inst.clique
    independent = set(range(g.n)) - clique
    assert g.n == CUBIC[name].n + CUBIC[name].m + 5
    assert all(len(g.adj[v] & clique) == 2 and not g.adj[v] & independent for v in independent)
    assert all(len(g.adj[v] & independent) == 3 for v in clique)
    assert is_chordal(g)


def test_non_cubic_rejected():
    with pytest.raises(PreconditionError):
        build_minforest_instance(path(4))
    with pytest.raises(InvalidParameterError):
        build_minforest_instance(complete(4), "hedgehog")


@pytest.mark.parametrize("variant", ["split", "echinus"])
@pytest.mark.parametrize("name,u", [("K4", {0, 1, 2}), ("K33", {0, 1, 2}), ("prism", {0, 1, 3, 5})])
def test_vc_to_cover_and_back(name, u, variant):
    h = CUBIC[name]
    inst = build_minforest_instance(h, variant)
    w = vc_to_cover(inst, u)
    assert len(w.forcing_set) == inst.ell == h.n + 1
    assert w.nontrivial_count <= len(u)
    assert validate_tree_cover(inst.g, w.cover)
    final, _ = derived_set(inst.g, w.forcing_set, Rule.POSITIVE, w.trace.events)
    assert len(final) == inst.g.n
    back = cover_to_vc(inst, w)
    assert len(back) <= len(u)
    assert all(a in back or b in back for a, b in h.edges())


def test_full_cover_always_works():
    for seed in range(5):
        h = random_cubic(8, seed)
        inst = build_minforest_instance(h)
        w = vc_to_cover(inst, range(h.n))
        assert cover_to_vc(inst, w) is not None


def test_vc_to_cover_rejects_non_cover():
    inst = build_minforest_instance(complete(4))
    with pytest.raises(PreconditionError):
        vc_to_cover(inst, {0, 1})


def test_k4_decision_witness_maps_back():
    inst = build_minforest_instance(complete(4))
    ok, w = min_forest_decision(inst.g, inst.ell, 3)
    assert ok
    assert len(cover_to_vc(inst, w)) <= 3
    assert classify_f1(inst, w.cover) in (1, 2)


def test_case_three_cannot_occur():
    # F_1 would need x1 and x2 in one tree; with x1 black, x2 and y share a
    # white component, so x1 always sees two white neighbours there
    inst = build_minforest_instance(complete(4))
    x1, x2, y = (inst.specials[s] for s in ("x1", "x2", "y"))
    initial = frozenset(inst.v_map) | {x1}
    with pytest.raises(TraceInvalidError):
        derived_set(inst.g, initial, Rule.POSITIVE, [(x1, x2)])
    with pytest.raises(TraceInvalidError):
        derived_set(inst.g, initial, Rule.POSITIVE, [(x1, y)])


def test_classify_rejects_degenerate_cover():
    inst = build_minforest_instance(complete(4))
    trivial = TreeCover(tuple(Tree(v, frozenset({v})) for v in range(inst.g.n)))
    with pytest.raises(PreconditionError):
        classify_f1(inst, trivial)


def test_critical_pairs_examples():
    a = critical_pairs(path(5))
    assert a is not None
    assert sorted(a.pairs) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5)])
    assert critical_pairs(g) is not None
    assert min_forest_decision(g, brute_zplus(g), 1)[0]


def test_critical_pairs_preconditions():
    with pytest.raises(PreconditionError):
        critical_pairs(complete(4))
    with pytest.raises(NotChordalError):
        critical_pairs(cycle(4))
    with pytest.raises(PreconditionError):
        critical_pairs(Graph(4, [(0, 1), (2, 3)]))


def test_three_triangles_on_an_apex():
    # three triangles sharing vertex 0: each clique meets two others at 0 only
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)])
    got = critical_pairs(g) is not None
    assert got == min_forest_decision(g, brute_zplus(g), 1)[0]


# a one-tree optimal cover exists, yet clique {0, 1, 4} has no critical pair
ONE_TREE_NO_PAIRS = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (3, 5)])
# every clique has a critical pair, yet no vertex has degree 5, so no induced
# tree spans five vertices and Z+ = 2 admits no one-tree cover
PAIRS_NO_ONE_TREE = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (3, 5)])


def test_one_tree_cover_without_critical_pairs():
    g = ONE_TREE_NO_PAIRS
    assert brute_zplus(g) == 2 == g.n - brute_cc(g)
    assert critical_pairs(g) is None
    ok, w = min_forest_decision(g, 2, 1)
    assert ok and w.forcing_set == frozenset({0, 1})
    (tree,) = [t for t in w.cover if not t.trivial]
    assert tree.vertices == frozenset({0, 2, 3, 4, 5})


def test_critical_pairs_without_one_tree_cover():
    g = PAIRS_NO_ONE_TREE
    a = critical_pairs(g)
    assert a is not None
    assert sorted(a.pairs) == [(0, 3), (0, 4), (1, 2), (1, 5)]
    assert max(len(nb) for nb in g.adj) < 5
    assert not min_forest_decision(g, brute_zplus(g), 1)[0]
    with pytest.raises(PreconditionError):
        one_tree_cover(g, a)


def test_tree_forming_pairs_give_optimal_one_tree_cover(chordal_upto7):
    built = 0
    for g in chordal_upto7:
        if g.n < 3 or g.m == g.n * (g.n - 1) // 2:
            continue
        a = critical_pairs(g)
        if a is None:
            continue
        try:
            cover, trace = one_tree_cover(g, a)
        except PreconditionError:
            continue
        built += 1
        assert len(cover) == brute_zplus(g) == g.n - brute_cc(g)
        assert cover.nontrivial_count == 1
        assert forcing_trees(g, trace).nontrivial_count == 1
    assert built > 100


def test_one_tree_cover_meets_every_clique_twice(chordal_upto7):
    from zeroforce.exact import maximal_cliques

    for g in chordal_upto7:
        if g.n < 3 or g.n > 6 or g.m == g.n * (g.n - 1) // 2:
            continue
        ok, w = min_forest_decision(g, brute_zplus(g), 1)
        if not ok:
            continue
        (tree,) = [t for t in w.cover if not t.trivial]
        assert all(len(c & tree.vertices) == 2 for c in maximal_cliques(g))


def test_one_tree_cover_path():
    g = path(5)
    cover, trace = one_tree_cover(g, critical_pairs(g))
    assert len(cover) == 1 and cover.trees[0].vertices == frozenset(range(5))
    assert trace.initial == frozenset({0})


def test_one_tree_cover_through_a_path_of_cliques():
    # triangles chained at single vertices: 0-1-2, 2-3-4, 4-5-6
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
    cover, trace = one_tree_cover(g, critical_pairs(g))
    (tree,) = [t for t in cover if not t.trivial]
    assert {2, 4} <= tree.vertices
    assert len(cover) == brute_zplus(g) == 4


def test_induced_tree_cover_examples():
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    black, _ = induced_tree_cover(tree, range(5))
    assert len(black) == 1
    g, t = four_clique_ring()
    black, trace = induced_tree_cover(g, t)
    assert len(black) == 12 - 4 == 8
    assert is_forcing_set(g, black, Rule.POSITIVE)
    assert forcing_trees(g, trace).nontrivial_count == 1
    assert brute_zplus(g) == 8


def test_induced_tree_cover_preconditions():
    g, t = four_clique_ring()
    with pytest.raises(PreconditionError):
        induced_tree_cover(g, t[:4])
    with pytest.raises(PreconditionError):
        induced_tree_cover(complete(3), range(3), cc=1)


def test_induced_tree_cover_matches_single_component_t_black():
    hits = 0
    for seed in range(300):
        g = random_chordal(9, 0.6, seed)
        res = zplus_chordal(g)
        tb = t_black(res)
        if len(tb) != 1:
            continue
        hits += 1
        black, _ = induced_tree_cover(g, tb.trees[0].vertices)
        assert len(black) == res.zplus
    assert hits


def test_cycle_of_three_triangles():
    cc = cycle_of_cliques([3, 3, 3])
    assert cc.graph.n == 6
    init, trace = cycle_clique_forcing_sets(cc.graph, cc.cliques, "standard")
    assert len(init) == 5
    assert forcing_trees(cc.graph, trace).nontrivial_count == 1


def test_cycle_of_four_triangles_optimal():
    cc = cycle_of_cliques([3, 3, 3, 3])
    g = cc.graph
    assert g.n == 8
    init, trace = cycle_clique_forcing_sets(g, cc.cliques, "optimal")
    assert len(init) == 8 - 4 == brute_zplus(g)
    assert is_forcing_set(g, init, Rule.STANDARD)
    assert forcing_trees(g, trace).nontrivial_count == 1
    assert 8 - 4 <= brute_zplus(g) <= brute_z(g) <= 8 - 4 + 2


def test_cycle_clique_preconditions():
    cc = cycle_of_cliques([3, 3, 3, 3])
    with pytest.raises(PreconditionError):
        cycle_clique_forcing_sets(cc.graph, cc.cliques[:2])
    with pytest.raises(PreconditionError):
        cycle_clique_forcing_sets(cc.graph, [cc.cliques[0], cc.cliques[2], cc.cliques[1], cc.cliques[3]])
    bare = cycle_of_cliques([4, 2, 4, 2], overlap=1)
    with pytest.raises(PreconditionError):
        cycle_clique_forcing_sets(bare.graph, bare.cliques[1:] + bare.cliques[:1], "optimal")
    with pytest.raises(InvalidParameterError):
        cycle_clique_forcing_sets(cc.graph, cc.cliques, "best")
