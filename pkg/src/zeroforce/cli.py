"""Command-line front end.

Exit status: 0 success, 2 usage, 3 unparsable input, 4 failed precondition
(for instance a non-chordal graph), 5 oracle cap exceeded, 6 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from . import bench, exact, generators, io, reductions, search
from .errors import CapExceededError, GraphParseError, PreconditionError, TraceInvalidError, ZeroForcingError
from .forcing import Rule, derived_set, forcing_trees
from .graph import Graph, is_chordal
from .zplus_chordal import forcing_process_from_result, zplus_chordal

EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP, EXIT_VERIFY = 3, 4, 5, 6


class VerificationFailed(Exception):
    pass


class Report:
    """Collects results and per-phase timings; rendered as text or JSON."""

    def __init__(self, argv: list[str]):
        self.command = argv
        self.input = None
        self.results: list[dict] = []
        self.timing: dict[str, float] = {}

    def describe(self, g: Graph, chordal: bool | None = None) -> None:
        self.input = {"n": g.n, "m": g.m, "chordal": is_chordal(g) if chordal is None else chordal}

    @contextmanager
    def phase(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timing[name] = round(time.perf_counter() - t0, 6)

    def add(self, operation: str, name: str, value, witness=None) -> None:
        entry = {"operation": operation, "name": name, "value": value}
        if witness is not None:
            entry["witness"] = witness
        self.results.append(entry)

    def as_dict(self) -> dict:
        return {"command": self.command, "input": self.input, "results": self.results, "timing": self.timing}

    def text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"{r['name']}: {_fmt(r['value'])}")
            if "witness" in r:
                lines.append(f"  witness: {_fmt(r['witness'])}")
        return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return " ".join(_fmt(v) if isinstance(v, list) else str(v) for v in value) if value and not isinstance(value[0], list) else "; ".join(_fmt(v) for v in value)
    return str(value)


def _load(path: str) -> Graph:
    if path == "-":
        return io.parse_edge_list(sys.stdin)
    return io.read_edge_list(path)


def _emit(report: Report, args) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report.as_dict(), indent=2))
    else:
        text = report.text()
        if text:
            print(text)


# commands ---------------------------------------------------------------------


def cmd_zplus(args, report: Report) -> int:
    with report.phase("parse"):
        g = _load(args.graph)
    with report.phase("chordality"):
        report.describe(g)
    if not report.input["chordal"]:
        print("graph is not chordal; use `zeroforce oracle zplus` for small graphs", file=sys.stderr)
        return EXIT_PRECONDITION
    with report.phase("zplus_chordal"):
        res = zplus_chordal(g)
    report.add("zplus_chordal", "Z+", res.zplus, sorted(res.black_set))
    report.add("zplus_chordal", "clique cover size", len(res.clique_cover), [sorted(c) for c in res.clique_cover])
    report.add(
        "zplus_chordal",
        "tree cover size",
        len(res.tree_cover),
        [sorted(t.vertices) for t in res.tree_cover if not t.trivial],
    )
    if args.dot:
        Path(args.dot).write_text(io.to_dot(g, res))
    if args.trace:
        with report.phase("trace"):
            trace = forcing_process_from_result(g, res, validate=g.n <= 5000)
        Path(args.trace).write_text(io.format_trace(trace))
    _emit(report, args)
    return 0


def cmd_oracle(args, report: Report) -> int:
    g = _load(args.graph)
    report.describe(g)
    cap = args.cap
    with report.phase(args.which):
        if args.which == "z":
            s = exact.min_forcing_set(g, Rule.STANDARD, cap or 20)
            report.add("brute_z", "Z", len(s), sorted(s))
        elif args.which == "zplus":
            s = exact.min_forcing_set(g, Rule.POSITIVE, cap or 20)
            report.add("brute_zplus", "Z+", len(s), sorted(s))
        elif args.which == "cc":
            w = exact.brute_cc_witness(g, cap or 24)
            report.add("brute_cc", "cc", len(w), [sorted(c) for c in w])
        elif args.which == "treecover":
            report.add("brute_tree_cover_number", "T", exact.brute_tree_cover_number(g, cap or 12))
        elif args.which == "vc":
            size, wit = exact.brute_min_vertex_cover(g, cap or 40)
            report.add("brute_min_vertex_cover", "vertex cover", size, sorted(wit))
        else:
            if args.ell is None or args.k is None:
                print("minforest needs --ell and --k", file=sys.stderr)
                return 2
            ok, wit = exact.min_forest_decision(g, args.ell, args.k, cap or 20)
            report.add(
                "min_forest_decision",
                f"min-forest(ell={args.ell}, k={args.k})",
                ok,
                [sorted(t.vertices) for t in wit.cover if not t.trivial] if wit else None,
            )
    _emit(report, args)
    return 0


def cmd_bench(args, report: Report) -> int:
    sizes = [int(float(s)) for s in args.sizes.split(",")]
    with report.phase("bench"):
        rows = bench.run_bench(sizes, args.seed, args.repeats)
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    try:
        bench.write_csv(rows, out)
    finally:
        if args.csv:
            out.close()
    print(f"per-(n+m) spread: {bench.spread(rows):.3f}", file=sys.stderr)
    return 0


def cmd_verify(args, report: Report) -> int:
    g = _load(args.graph)
    report.describe(g, chordal=None)
    text = Path(args.file).read_text()
    if args.kind == "trace":
        trace = io.parse_trace(text, args.rule)
        try:
            final, replayed = derived_set(g, trace.initial, trace.rule, trace.events)
        except TraceInvalidError as exc:
            raise VerificationFailed(str(exc)) from None
        complete = len(final) == g.n
        report.add("derived_set", "complete", complete)
        if complete:
            report.add("forcing_trees", "trees", len(forcing_trees(g, replayed)))
    else:
        strategy = io.parse_strategy(text)
        if strategy.model == "fms":
            out = search.simulate_fms(g, strategy)
        else:
            out = search.simulate_pfms(g, strategy)
        complete = out.cleared
        report.add(f"simulate_{strategy.model}", "cleared", complete)
        report.add(f"simulate_{strategy.model}", "placements", strategy.placements)
        if out.first_illegal is not None:
            report.add(f"simulate_{strategy.model}", "first illegal step", out.first_illegal)
    _emit(report, args)
    return 0 if complete else EXIT_VERIFY


def cmd_generate(args, report: Report) -> int:
    params = json.loads(args.params) if args.params else {}
    g = generators.generate(args.kind, params, args.seed)
    text = io.format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_search(args, report: Report) -> int:
    g = _load(args.graph)
    text = Path(args.file).read_text()
    if args.action == "simulate":
        return cmd_verify(argparse.Namespace(**{**vars(args), "kind": "strategy"}), report)
    if args.to in ("fms", "pfms"):
        rule = Rule.STANDARD if args.to == "fms" else Rule.POSITIVE
        trace = io.parse_trace(text, rule)
        conv = search.zf_to_fms if args.to == "fms" else search.pzf_to_pfms
        sys.stdout.write(io.format_strategy(conv(g, trace)))
    else:
        strategy = io.parse_strategy(text)
        conv = search.fms_to_zf if strategy.model == "fms" else search.pfms_to_pzf
        sys.stdout.write(io.format_trace(conv(g, strategy)))
    return 0


def cmd_reduce(args, report: Report) -> int:
    h = _load(args.cubic)
    inst = reductions.build_minforest_instance(h, "echinus" if args.echinus else "split")
    if args.action == "build":
        text = io.format_edge_list(inst.g)
        side = {
            "variant": inst.variant,
            "v_map": list(inst.v_map),
            "e_map": [[a, b, v] for (a, b), v in inst.e_map.items()],
            "specials": inst.specials,
            "ell": inst.ell,
        }
        if args.out:
            Path(args.out).write_text(text)
            Path(args.out).with_suffix(".json").write_text(json.dumps(side, indent=2) + "\n")
        else:
            sys.stdout.write(text)
            print(json.dumps(side), file=sys.stderr)
        return 0
    size, cover = exact.brute_min_vertex_cover(h)
    report.describe(inst.g, chordal=True)
    wit = reductions.vc_to_cover(inst, cover)
    back = reductions.cover_to_vc(inst, wit)
    report.add("brute_min_vertex_cover", "vertex cover", size, sorted(cover))
    report.add("vc_to_cover", "non-trivial trees", wit.nontrivial_count)
    report.add("cover_to_vc", "recovered cover", len(back), sorted(back))
    ok = wit.nontrivial_count <= size and len(back) <= size
    report.add("reduce check", "round trip ok", ok)
    _emit(report, args)
    return 0 if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zeroforce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zplus", help="optimal positive zero forcing set of a chordal graph")
    z.add_argument("graph", help="edge-list file, or - for stdin")
    z.add_argument("--dot", metavar="FILE", help="write a coloured DOT rendering")
    z.add_argument("--trace", metavar="FILE", help="write the forcing trace")
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=cmd_zplus)

    o = sub.add_parser("oracle", help="brute-force parameters of small graphs")
    o.add_argument("which", choices=["z", "zplus", "cc", "treecover", "vc", "minforest"])
    o.add_argument("graph")
    o.add_argument("--cap", type=int, help="largest vertex count to attempt")
    o.add_argument("--ell", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="time the chordal algorithm on a size ladder")
    b.add_argument("--sizes", default=",".join(str(s) for s in bench.DEFAULT_SIZES), help="comma-separated edge targets")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--csv", metavar="FILE")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="replay a trace or strategy against a graph")
    v.add_argument("graph")
    v.add_argument("file")
    v.add_argument("--kind", choices=["trace", "strategy"], default="trace")
    v.add_argument("--rule", choices=[r.value for r in Rule])
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("generate", help="write a generated graph as an edge list")
    gen.add_argument("kind")
    gen.add_argument("--params", help='JSON object or list, e.g. \'{"n": 5}\'')
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", metavar="FILE")
    gen.set_defaults(func=cmd_generate)

    s = sub.add_parser("search", help="simulate or convert search strategies")
    s.add_argument("action", choices=["simulate", "convert"])
    s.add_argument("graph")
    s.add_argument("file", help="strategy (simulate, or convert to a trace) or trace (convert --to)")
    s.add_argument("--to", choices=["fms", "pfms", "trace"], default="trace")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("reduce", help="vertex cover to Min-Forest gadget")
    r.add_argument("action", choices=["build", "check"])
    r.add_argument("--cubic", required=True, help="edge list of a cubic graph")
    r.add_argument("--echinus", action="store_true")
    r.add_argument("--out", metavar="FILE")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = Report(argv)
    try:
        return args.func(args, report)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (VerificationFailed, TraceInvalidError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (PreconditionError, ZeroForcingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
