"""Command-line front end: solve one instance, compare engines, manage codebooks.

Exit codes: 0 success (an uncolorable instance is still a successful run),
1 I/O or input-parsing failure, 2 configuration problem, 3 engine
disagreement from `compare`, 4 codebook validation failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys

from . import oracle, solver
from .codec import (
    Codebook,
    CodecError,
    builtin_table1,
    color_name,
    dump_codebook,
    generate_codebook,
    load_codebook,
    validate_codebook,
)
from .graphs import DimacsError, Graph, builtin_names, builtin_graph, parse_dimacs
from .solver import BudgetError, DEFAULT_STRAND_BUDGET

BUDGET_ENV = "HELIX_BUDGET"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2
EXIT_DISAGREE = 3
EXIT_BAD_CODEBOOK = 4


class InputError(Exception):
    """File or text that could not be read or parsed (exit 1)."""


class ConfigError(Exception):
    """A coherent request the tool refuses to run (exit 2)."""


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi G(n, p); identical output for identical arguments."""
    if n < 1:
        raise ConfigError(f"random graph needs at least 1 vertex, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ConfigError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def parse_graph_spec(spec: str) -> tuple[Graph, list[str]]:
    if spec.startswith("builtin:"):
        try:
            return builtin_graph(spec[len("builtin:") :]), []
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    if spec.startswith("random:"):
        parts = spec[len("random:") :].split(",")
        if len(parts) != 3:
            raise ConfigError(f"random graph spec must be random:n,p,seed, got {spec!r}")
        try:
            n, p, seed = int(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError(f"bad numbers in random graph spec {spec!r}") from None
        return random_graph(n, p, seed), []
    try:
        with open(spec) as f:
            text = f.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {spec!r}: {exc}") from None
    try:
        return parse_dimacs(text)
    except DimacsError as exc:
        raise InputError(f"{spec}: {exc}") from None


def parse_codebook_spec(spec: str, g: Graph, k: int) -> Codebook:
    if spec == "table1":
        cb = builtin_table1()
        if g.n > cb.n or k > cb.k:
            raise ConfigError(
                f"table1 covers {cb.n} vertices x {cb.k} colors, "
                f"instance needs {g.n} x {k}"
            )
        return cb
    if spec.startswith("gen:"):
        parts = spec[len("gen:") :].split(",")
        if len(parts) != 2:
            raise ConfigError(f"generator spec must be gen:length,seed, got {spec!r}")
        try:
            length, seed = int(parts[0]), int(parts[1])
        except ValueError:
            raise ConfigError(f"bad numbers in generator spec {spec!r}") from None
        try:
            return generate_codebook(g.n, k, length, seed)
        except CodecError as exc:
            raise ConfigError(str(exc)) from None
    try:
        cb = load_codebook(spec)
    except OSError as exc:
        raise InputError(f"cannot read codebook file {spec!r}: {exc}") from None
    except (json.JSONDecodeError, CodecError) as exc:
        raise InputError(f"{spec}: {exc}") from None
    if cb.n < g.n or cb.k < k:
        raise ConfigError(
            f"codebook covers {cb.n} vertices x {cb.k} colors, instance needs {g.n} x {k}"
        )
    return cb


def parse_order_spec(spec: str, g: Graph):
    if spec == "natural":
        return None
    try:
        order = [int(tok) for tok in spec.split(",")]
    except ValueError:
        raise ConfigError(f"order must be 'natural' or a comma list, got {spec!r}") from None
    if sorted(order) != list(range(1, g.n + 1)):
        raise ConfigError(f"order must be a permutation of 1..{g.n}, got {spec!r}")
    return order


def strand_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_STRAND_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _coloring_text(coloring) -> str:
    return " ".join(color_name(c) for c in coloring)


def _print_solutions(solutions: solver.SolutionSet, limit: int = 20) -> None:
    listed = solutions.sorted_colorings()
    for coloring in listed[:limit]:
        print(f"  {_coloring_text(coloring)}")
    if len(listed) > limit:
        print(f"  ... and {len(listed) - limit} more")


def _print_run(g: Graph, k: int, mode: str, solutions, trace) -> None:
    print(f"== {mode} ==")
    if trace.steps:
        header = f"{'step':>4} {'vertex':>6} {'before':>7} {'after_append':>16} {'after_filter':>16} {'discard':>8} {'after':>7}"
        print(header)
        for i, s in enumerate(trace.steps, start=1):
            appended = "/".join(str(x) for x in s.per_color_after_append)
            filtered = "/".join(str(x) for x in s.per_color_after_filter)
            print(
                f"{i:>4} {s.vertex:>6} {s.t0_before:>7} {appended:>16} "
                f"{filtered:>16} {s.discarded:>8} {s.t0_after:>7}"
            )
    full = k**g.n
    ratio = trace.peak_tube_size / full
    print(
        f"peak tube size {trace.peak_tube_size} of k^n = {full} "
        f"({ratio:.3g} of the full space, reduction {full / trace.peak_tube_size:.3g}x)"
    )
    ops = ", ".join(f"{name}={v}" for name, v in trace.op_totals.as_dict().items())
    print(f"ops: {ops}")
    print(f"colorable: {str(solutions.colorable).lower()}; {len(solutions.colorings)} solutions")
    _print_solutions(solutions)


def cmd_solve(args) -> int:
    g, warnings = parse_graph_spec(args.graph)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    k = args.colors
    if k < 1:
        raise ConfigError(f"--colors must be at least 1, got {k}")
    cb = parse_codebook_spec(args.codebook, g, k)
    order = parse_order_spec(args.order, g)
    runs = {}
    if args.mode in ("incremental", "both"):
        runs["incremental"] = solver.solve_incremental(g, k, cb, args.match, order)
    if args.mode in ("monolithic", "both"):
        runs["monolithic"] = solver.solve_monolithic(g, k, cb, args.match, strand_budget())
    docs = {
        mode: solver.trace_document(g, k, order, mode, solutions, trace)
        for mode, (solutions, trace) in runs.items()
    }
    if args.trace:
        payload = docs[args.mode] if args.mode != "both" else docs
        try:
            with open(args.trace, "w") as f:
                json.dump(payload, f, indent=2)
                f.write("\n")
        except OSError as exc:
            raise InputError(f"cannot write trace {args.trace!r}: {exc}") from None
    if args.json:
        payload = docs[args.mode] if args.mode != "both" else docs
        print(json.dumps(payload, indent=2))
    else:
        print(f"graph {args.graph} (n={g.n}, m={g.m}), colors={k}, match={args.match}")
        for mode, (solutions, trace) in runs.items():
            _print_run(g, k, mode, solutions, trace)
    return EXIT_OK


def _minimal_counterexample(sets: dict[str, frozenset]) -> tuple | None:
    """Lexicographically smallest coloring on which any two engines disagree."""
    witnesses = set()
    for a, b in itertools.combinations(sets, 2):
        witnesses |= sets[a] ^ sets[b]
    return min(witnesses) if witnesses else None


def cmd_compare(args) -> int:
    g, warnings = parse_graph_spec(args.graph)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    k = args.colors
    if k < 1:
        raise ConfigError(f"--colors must be at least 1, got {k}")
    budget = strand_budget()
    if k**g.n > budget:
        raise ConfigError(
            f"compare needs the monolithic engine; k^n = {k**g.n} is over the budget of {budget}"
        )
    cb = parse_codebook_spec(args.codebook, g, k)
    order = parse_order_spec(args.order, g)
    oracle_set = frozenset(oracle.enumerate_colorings(g, k))
    inc_solutions, inc_trace = solver.solve_incremental(g, k, cb, args.match, order)
    mono_solutions, mono_trace = solver.solve_monolithic(g, k, cb, args.match, budget)
    sets = {
        "oracle": oracle_set,
        "incremental": inc_solutions.colorings,
        "monolithic": mono_solutions.colorings,
    }
    agree = len(set(sets.values())) == 1
    full = k**g.n
    reduction = full / inc_trace.peak_tube_size
    report = {
        "graph": {"n": g.n, "m": g.m},
        "k": k,
        "agree": agree,
        "counts": {name: len(s) for name, s in sets.items()},
        "peak_tube_size": {
            "incremental": inc_trace.peak_tube_size,
            "monolithic": mono_trace.peak_tube_size,
        },
        "reduction_factor": reduction,
    }
    counterexample = None
    if not agree:
        counterexample = _minimal_counterexample(sets)
        report["counterexample"] = list(counterexample)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"graph {args.graph} (n={g.n}, m={g.m}), colors={k}")
        for name, s in sets.items():
            print(f"{name}: {len(s)} solutions")
        print(
            f"peak tube size: incremental {inc_trace.peak_tube_size}, "
            f"monolithic {mono_trace.peak_tube_size} (= k^n {full})"
        )
        print(f"reduction factor: {reduction:.3g}x")
        print(f"agree: {str(agree).lower()}")
        if not agree:
            sides = [name for name, s in sets.items() if counterexample in s]
            print(
                f"counterexample: {_coloring_text(counterexample)} "
                f"(present in {', '.join(sides)} only)"
            )
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_codebook(args) -> int:
    if args.action == "generate":
        try:
            cb = generate_codebook(args.n, args.colors, args.length, args.seed)
        except CodecError as exc:
            raise ConfigError(str(exc)) from None
        text = dump_codebook(cb)
        if args.out:
            try:
                with open(args.out, "w") as f:
                    f.write(text)
            except OSError as exc:
                raise InputError(f"cannot write {args.out!r}: {exc}") from None
            print(f"wrote {cb.n * cb.k} codewords to {args.out}")
        else:
            print(text, end="")
        return EXIT_OK
    # validate
    if args.codebook == "table1":
        cb = builtin_table1()
    else:
        try:
            cb = load_codebook(args.codebook)
        except OSError as exc:
            raise InputError(f"cannot read codebook file {args.codebook!r}: {exc}") from None
        except (json.JSONDecodeError, CodecError) as exc:
            raise InputError(f"{args.codebook}: {exc}") from None
    report = validate_codebook(cb)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": report.ok,
                    "duplicates": [
                        [[a.vertex, a.color], [b.vertex, b.color]] for a, b in report.duplicates
                    ],
                    "junction_violations": [
                        {
                            "word": [v.word.vertex, v.word.color],
                            "left": [v.left.vertex, v.left.color],
                            "right": [v.right.vertex, v.right.color],
                            "offset": v.offset,
                        }
                        for v in report.junction_violations
                    ],
                    "min_pairwise_hamming": report.min_pairwise_hamming,
                },
                indent=2,
            )
        )
    else:
        print(f"codebook {args.codebook}: {cb.n} vertices x {cb.k} colors")
        print(f"duplicates: {len(report.duplicates)}")
        print(f"junction violations: {len(report.junction_violations)}")
        for v in report.junction_violations[:10]:
            print(
                f"  ({v.word.vertex},{color_name(v.word.color)}) occurs in "
                f"({v.left.vertex},{color_name(v.left.color)})+"
                f"({v.right.vertex},{color_name(v.right.color)}) at offset {v.offset}"
            )
        print(f"min pairwise hamming (equal-length pairs): {report.min_pairwise_hamming}")
        print(f"ok: {str(report.ok).lower()}")
    return EXIT_OK if report.ok else EXIT_BAD_CODEBOOK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helix",
        description="Tube-level simulator for incremental graph k-coloring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_mode=True):
        p.add_argument(
            "--graph",
            required=True,
            help=f"DIMACS .col path, builtin:NAME ({', '.join(builtin_names())}), or random:n,p,seed",
        )
        p.add_argument("--colors", type=int, required=True, help="number of colors k")
        if with_mode:
            p.add_argument(
                "--mode",
                choices=("incremental", "monolithic", "both"),
                default="incremental",
            )
        p.add_argument(
            "--codebook",
            default="gen:20,0",
            help="table1, gen:length,seed, or a codebook JSON path (default gen:20,0)",
        )
        p.add_argument("--match", choices=("symbolic", "nucleotide"), default="symbolic")
        p.add_argument(
            "--order",
            default="natural",
            help="vertex introduction order: 'natural' or a comma-separated permutation",
        )
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_solve = sub.add_parser("solve", help="run one instance and report solutions")
    add_common(p_solve)
    p_solve.add_argument("--trace", help="write the run trace as JSON to this path")
    p_solve.set_defaults(func=cmd_solve)

    p_compare = sub.add_parser(
        "compare", help="run oracle, incremental, and monolithic engines and compare"
    )
    add_common(p_compare, with_mode=False)
    p_compare.set_defaults(func=cmd_compare)

    p_cb = sub.add_parser("codebook", help="generate or validate codebooks")
    cb_sub = p_cb.add_subparsers(dest="action", required=True)
    p_gen = cb_sub.add_parser("generate")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--colors", type=int, required=True, help="color count")
    p_gen.add_argument("--length", type=int, default=20)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="output path (default: print to stdout)")
    p_gen.set_defaults(func=cmd_codebook, action="generate")
    p_val = cb_sub.add_parser("validate")
    p_val.add_argument("--codebook", required=True, help="table1 or a codebook JSON path")
    p_val.add_argument("--json", action="store_true")
    p_val.set_defaults(func=cmd_codebook, action="validate")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConfigError, solver.SolverError, CodecError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
