"""Text formats: edge lists, forcing traces, search strategies, DOT export."""

from __future__ import annotations

import re
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, TextIO

from .errors import GraphParseError
from .forcing import ForceEvent, ForcingTrace, Rule
from .graph import Graph

if TYPE_CHECKING:
    from .search import SearchStrategy
    from .zplus_chordal import ZplusResult


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if text:
            yield lineno, text


def _ints(lineno: int, text: str, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise GraphParseError(lineno, f"expected {count} integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(lineno, f"non-integer token in {text!r}") from None


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines; ``#`` starts a comment.

    Lines are consumed lazily so a file handle can be passed directly.
    Duplicate edges, loops and out-of-range ids are errors.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    it = _content_lines(lines)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise GraphParseError(0, "empty input: missing 'n m' header") from None
    n, m = _ints(lineno, header, 2)
    if n < 0 or m < 0:
        raise GraphParseError(lineno, "negative count in header")
    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    last = lineno
    for lineno, text in it:
        last = lineno
        u, v = _ints(lineno, text, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"vertex id outside 0..{n - 1} in edge ({u}, {v})")
        if u == v:
            raise GraphParseError(lineno, f"loop at vertex {u}")
        if v in adj[u]:
            raise GraphParseError(lineno, f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    if count != m:
        raise GraphParseError(last, f"header announces {m} edges but {count} were read")
    return Graph.from_adjacency(adj)


def read_edge_list(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, fh: TextIO) -> None:
    fh.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


# traces -------------------------------------------------------------------

_STEP = re.compile(r"^step\s+(-?\d+)\s*->\s*(-?\d+)(?:\s+\[component:([\d\s]*)\])?$")


def format_trace(trace: ForcingTrace) -> str:
    lines = [f"rule: {trace.rule.value}", "init: " + " ".join(map(str, sorted(trace.initial)))]
    for ev in trace.events:
        line = f"step {ev.forcer} -> {ev.forced}"
        if ev.component is not None:
            line += " [component: " + " ".join(map(str, sorted(ev.component))) + "]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_trace(lines: Iterable[str], rule: Rule | str | None = None) -> ForcingTrace:
    """Inverse of :func:`format_trace`.  An explicit ``rule`` overrides the file's."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    file_rule = None
    initial = None
    events = []
    for lineno, text in _content_lines(lines):
        if text.startswith("rule:"):
            try:
                file_rule = Rule(text[5:].strip())
            except ValueError:
                raise GraphParseError(lineno, f"unknown rule {text[5:].strip()!r}") from None
        elif text.startswith("init:"):
            if initial is not None:
                raise GraphParseError(lineno, "second 'init:' line")
            try:
                initial = frozenset(int(t) for t in text[5:].split())
            except ValueError:
                raise GraphParseError(lineno, "non-integer vertex in init line") from None
        else:
            match = _STEP.match(text)
            if not match:
                raise GraphParseError(lineno, f"cannot parse trace line {text!r}")
            if initial is None:
                raise GraphParseError(lineno, "step before 'init:' line")
            comp = frozenset(map(int, match.group(3).split())) if match.group(3) is not None else None
            events.append(ForceEvent(int(match.group(1)), int(match.group(2)), len(events), comp))
    if initial is None:
        raise GraphParseError(0, "trace has no 'init:' line")
    chosen = Rule(rule) if rule is not None else (file_rule or Rule.STANDARD)
    return ForcingTrace(initial, tuple(events), chosen)


# strategies ---------------------------------------------------------------


def format_strategy(strategy: "SearchStrategy") -> str:
    lines = [f"model: {strategy.model}"]
    for act in strategy.actions:
        prefix = f"@{act.target} " if act.target is not None else ""
        if act.kind == "place":
            lines.append(f"{prefix}place {act.v}")
        else:
            lines.append(f"{prefix}slide {act.u} {act.v}")
    return "\n".join(lines) + "\n"


def parse_strategy(lines: Iterable[str], model: str | None = None) -> "SearchStrategy":
    from .search import SearchAction, SearchStrategy

    if isinstance(lines, str):
        lines = lines.splitlines()
    file_model = None
    actions = []
    for lineno, text in _content_lines(lines):
        if text.startswith("model:"):
            file_model = text[6:].strip()
            if file_model not in ("fms", "pfms"):
                raise GraphParseError(lineno, f"unknown search model {file_model!r}")
            continue
        target = None
        if text.startswith("@"):
            head, _, text = text.partition(" ")
            target = head[1:]
            if not target:
                raise GraphParseError(lineno, "empty subgraph id after '@'")
        parts = text.split()
        try:
            if parts and parts[0] == "place" and len(parts) == 2:
                actions.append(SearchAction("place", int(parts[1]), None, target))
            elif parts and parts[0] == "slide" and len(parts) == 3:
                actions.append(SearchAction("slide", int(parts[2]), int(parts[1]), target))
            else:
                raise GraphParseError(lineno, f"cannot parse action {text!r}")
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex in {text!r}") from None
    chosen = model or file_model or ("pfms" if any(a.target for a in actions) else "fms")
    return SearchStrategy(tuple(actions), chosen)


# DOT ----------------------------------------------------------------------


def to_dot(g: Graph, result: "ZplusResult | None" = None, name: str = "G") -> str:
    """Graphviz rendering; with a result, black edges are solid, red ones dashed red,
    and black vertices filled."""

    def label(v: int) -> str:
        return g.labels[v] if g.labels else str(v)

    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = [f'label="{label(v)}"']
        if result is not None:
            if v in result.black_set:
                attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
            else:
                attrs += ["style=filled", "fillcolor=white"]
        out.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        if result is None:
            out.append(f"  {u} -- {v};")
        elif result.colouring.colour(u, v) == "black":
            out.append(f"  {u} -- {v} [color=black, penwidth=2];")
        else:
            out.append(f"  {u} -- {v} [color=red, style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"
