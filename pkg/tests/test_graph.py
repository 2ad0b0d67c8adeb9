from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_chordal, to_nx
from zeroforce.errors import InvalidOrderingError
from zeroforce.exact import maximal_cliques
from zeroforce.generators import complete, cycle, fig1_unicyclic, path, random_chordal, random_connected, star
from zeroforce.graph import (
    Graph,
    VertexOrdering,
    components,
    is_chordal,
    is_peo,
    is_simplicial,
    lex_bfs,
    maximal_cliques_chordal,
    perfect_elimination_ordering,
)


def test_graph_rejects_loops_merges_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    assert Graph(3, [(0, 1), (1, 0)]).m == 1
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_graph_basics():
    g = Graph(4, [(2, 1), (0, 1)])
    assert g.m == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.has_edge(1, 2) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert not g.is_connected()
    sub, back = g.induced([1, 2])
    assert sub.m == 1 and sorted(back) == [1, 2]


def test_lex_bfs_clique_reverse_is_peo():
    order = lex_bfs(complete(3))
    assert sorted(order) == [0, 1, 2]
    assert is_peo(complete(3), order.reversed())


def test_lex_bfs_path_from_end():
    order = lex_bfs(path(4))
    assert order.order == (0, 1, 2, 3)
    assert is_peo(path(4), (3, 2, 1, 0))


def test_c4_has_no_peo():
    c4 = cycle(4)
    assert not is_peo(c4, lex_bfs(c4).reversed())
    assert not any(is_peo(c4, p) for p in permutations(range(4)))


def test_lex_bfs_visits_disconnected_graphs():
    g = Graph(5, [(0, 1), (3, 4)])
    order = lex_bfs(g)
    assert sorted(order) == list(range(5))
    assert is_peo(g, order.reversed())


def test_is_peo_examples(g5):
    assert all(is_peo(complete(4), p) for p in permutations(range(4)))
    assert is_peo(g5, (5, 4, 1, 2, 3, 0))


def test_is_peo_rejects_non_permutations():
    with pytest.raises(InvalidOrderingError):
        is_peo(path(3), (0, 1))
    with pytest.raises(InvalidOrderingError):
        is_peo(path(3), (0, 1, 1))


def test_simplicial(g5):
    assert all(is_simplicial(complete(4), v) for v in range(4))
    k13 = star(3)
    assert not is_simplicial(k13, 0)
    assert is_simplicial(k13, 1)
    assert is_simplicial(g5, 5)
    assert not is_simplicial(g5, 0)


def test_components(g5):
    assert components(path(3), [1]) == [frozenset({0}), frozenset({2})]
    assert components(complete(4)) == [frozenset(range(4))]
    assert components(g5, [0]) == [frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4, 5})]


def test_maximal_cliques_chordal_examples(g5):
    peo = perfect_elimination_ordering(complete(4))
    assert list(maximal_cliques_chordal(complete(4), peo)) == [frozenset(range(4))]
    p4 = path(4)
    assert sorted(map(sorted, maximal_cliques_chordal(p4, perfect_elimination_ordering(p4)))) == [[0, 1], [1, 2], [2, 3]]
    got = maximal_cliques_chordal(g5, perfect_elimination_ordering(g5))
    assert set(got) == {frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3}), frozenset({0, 4, 5})}


def test_maximal_cliques_chordal_requires_peo():
    with pytest.raises(InvalidOrderingError):
        maximal_cliques_chordal(cycle(4), (0, 1, 2, 3))


def test_chordality_against_brute_force_on_small_graphs():
    for seed in range(120):
        g = random_connected(7, 0.45, seed)
        assert is_chordal(g) == brute_chordal(g) == nx.is_chordal(to_nx(g))


def test_maximal_cliques_match_networkx(chordal_upto7):
    for g in chordal_upto7:
        peo = perfect_elimination_ordering(g)
        assert peo is not None
        assert set(maximal_cliques_chordal(g, peo)) == set(maximal_cliques(g))


def test_random_chordal_lex_bfs_gives_peo():
    g = random_chordal(50, 0.3, 7)
    assert is_peo(g, lex_bfs(g).reversed())


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.floats(0, 1), st.integers(0, 10**6))
def test_random_chordal_always_chordal(n, density, seed):
    g = random_chordal(n, density, seed)
    assert g.is_connected()
    assert nx.is_chordal(to_nx(g))
    peo = perfect_elimination_ordering(g)
    assert peo is not None and peo.kind == "peo"


def test_vertex_ordering_kind_checked():
    with pytest.raises(ValueError):
        VertexOrdering((0,), "sideways")
