import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_zplus
from zeroforce.errors import NotChordalError
from zeroforce.exact import brute_cc, brute_zplus
from zeroforce.forcing import Rule, derived_set, validate_tree_cover
from zeroforce.generators import complete, cycle, fig1_unicyclic, path, random_chordal, star
from zeroforce.graph import Graph
from zeroforce.zplus_chordal import forcing_process_from_result, t_black, t_black_properties, zplus_chordal


def check_against_naive(g):
    res = zplus_chordal(g)
    black, black_edges, colour = naive_zplus(g, res.peo.order)
    assert res.black_set == black
    assert res.colouring.black_edges == black_edges
    # every edge gets exactly one colour
    assert set(colour) == set(g.edges())
    assert set(res.colouring.red_edges(g)) == {e for e, c in colour.items() if c == "red"}
    return res


def test_complete_graph():
    res = zplus_chordal(complete(5))
    assert res.zplus == 4
    assert list(res.clique_cover) == [frozenset(range(5))]
    sizes = sorted(len(t.vertices) for t in res.tree_cover)
    assert sizes == [1, 1, 1, 2]


@pytest.mark.parametrize("g", [path(6), star(5), Graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)])])
def test_trees(g):
    res = zplus_chordal(g)
    assert res.zplus == 1
    assert sorted(map(sorted, res.clique_cover)) == sorted(map(list, g.edges()))
    assert len(res.tree_cover) == 1 and res.tree_cover.trees[0].vertices == frozenset(range(g.n))


def test_g5(g5):
    res = zplus_chordal(g5)
    assert res.zplus == 2 == g5.n - len(res.clique_cover)
    assert len(res.clique_cover) == 4


def test_rejects_non_chordal():
    with pytest.raises(NotChordalError):
        zplus_chordal(cycle(4))


def test_disconnected_input():
    g = Graph(7, [(0, 1), (1, 2), (0, 2), (4, 5)])
    res = check_against_naive(g)
    # triangle needs 2, the edge 1, and each isolated vertex 1
    assert res.zplus == 2 + 1 + 2


def test_t_black_examples():
    res = zplus_chordal(complete(4))
    tb = t_black(res)
    assert len(tb) == 1 and len(tb.trees[0].vertices) == 2
    assert sum(res.colouring.vertex_colour[v] == "black" for v in tb.trees[0].vertices) == 1
    res = zplus_chordal(path(5))
    assert len(res.colouring.black_edges) == 4


def test_forcing_process_examples():
    res = zplus_chordal(complete(4))
    trace = forcing_process_from_result(complete(4), res)
    assert len(trace.events) == 1
    tree = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    res = zplus_chordal(tree)
    trace = forcing_process_from_result(tree, res)
    (root,) = res.black_set
    assert trace.events[0].forcer == root
    reached = {root}
    for ev in trace.events:
        assert ev.forcer in reached
        reached.add(ev.forced)
    assert reached == set(range(6))


def test_exhaustive_small_corpus(chordal_upto7):
    for g in chordal_upto7:
        res = check_against_naive(g)
        assert all(t_black_properties(res).values())
        assert res.clique_cover.is_valid(g)
        assert validate_tree_cover(g, res.tree_cover)
        assert len(res.tree_cover) == res.zplus
        final, _ = derived_set(g, res.black_set, Rule.POSITIVE, forcing_process_from_result(g, res).events)
        assert final == frozenset(range(g.n))
        if g.n <= 6:
            assert res.zplus == brute_zplus(g) == g.n - brute_cc(g)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.floats(0, 1), st.integers(0, 10**6))
def test_random_against_naive(n, density, seed):
    g = random_chordal(n, density, seed)
    res = check_against_naive(g)
    props = t_black_properties(res)
    assert props == {"forest": True, "contains_all_white": True, "one_black_per_component": True, "induced": True}
    assert res.zplus == g.n - len(res.clique_cover)


def test_pending_clique_worst_case_family():
    # K_k with one simplicial vertex per (k-1)-subset: many overlapping pending cliques
    k = 7
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for skip in range(k):
        v = k + skip
        edges += [(v, u) for u in range(k) if u != skip]
    g = Graph(2 * k, edges)
    res = check_against_naive(g)
    assert res.zplus == brute_zplus(g)


def test_result_is_immutable():
    res = zplus_chordal(path(3))
    with pytest.raises(AttributeError):
        res.black_set = frozenset()
