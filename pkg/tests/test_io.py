import io as stdio

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforce.errors import GraphParseError
from zeroforce.forcing import Rule, derived_set
from zeroforce.generators import fig1_unicyclic, random_chordal, random_connected
from zeroforce.io import (
    format_edge_list,
    format_strategy,
    format_trace,
    parse_edge_list,
    parse_strategy,
    parse_trace,
    read_edge_list,
    to_dot,
    write_edge_list,
)
from zeroforce.search import SearchAction, SearchStrategy
from zeroforce.zplus_chordal import zplus_chordal


def test_parse_with_comments():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2  # second\n\n2 0\n")
    assert (g.n, g.m) == (3, 3)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 0),
        ("3\n", 1),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.floats(0.3, 1), st.integers(0, 10**6))
def test_edge_list_round_trip(n, p, seed):
    g = random_connected(n, p, seed)
    assert parse_edge_list(format_edge_list(g)) == g
    buf = stdio.StringIO()
    write_edge_list(g, buf)
    assert buf.getvalue() == format_edge_list(g)


def test_read_from_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 1\n0 1\n")
    assert read_edge_list(path).m == 1


def test_trace_round_trip(g5):
    _, trace = derived_set(g5, {1, 4}, Rule.POSITIVE)
    text = format_trace(trace)
    assert text.startswith("rule: positive\ninit: 1 4\n")
    back = parse_trace(text)
    assert back == trace
    assert parse_trace(text, Rule.STANDARD).rule is Rule.STANDARD


def test_trace_parse_errors():
    with pytest.raises(GraphParseError):
        parse_trace("step 0 -> 1\n")
    with pytest.raises(GraphParseError):
        parse_trace("init: 0\nforce 0 1\n")
    with pytest.raises(GraphParseError):
        parse_trace("rule: sideways\ninit: 0\n")
    with pytest.raises(GraphParseError):
        parse_trace("")


def test_strategy_round_trip():
    s = SearchStrategy((SearchAction.place(0, "0"), SearchAction.slide(0, 1, "0.1")), "pfms")
    text = format_strategy(s)
    assert "@0.1 slide 0 1" in text
    assert parse_strategy(text) == s
    plain = parse_strategy("place 0\nslide 0 1\n")
    assert plain.model == "fms" and plain.placements == 1


def test_strategy_parse_errors():
    with pytest.raises(GraphParseError):
        parse_strategy("hop 1\n")
    with pytest.raises(GraphParseError):
        parse_strategy("place a\n")
    with pytest.raises(GraphParseError):
        parse_strategy("model: node\n")


def test_dot_output():
    g = fig1_unicyclic(5)
    plain = to_dot(g)
    assert plain.count("--") == g.m
    res = zplus_chordal(g)
    dot = to_dot(g, res)
    assert dot.count("penwidth=2") == len(res.colouring.black_edges)
    assert dot.count("style=dashed") == g.m - len(res.colouring.black_edges)
    assert dot.count("fillcolor=black") == res.zplus


def test_dot_uses_labels():
    from zeroforce.reductions import four_clique_ring

    g, _ = four_clique_ring()
    assert 'label="a"' in to_dot(g)
