"""Graph k-coloring runs on the tube machine.

Two modes.  The incremental mode introduces vertices one at a time: copy the
survivor tube into one tube per color, append that color's codeword for the
new vertex, extract away every strand that gives an already-placed neighbor
the same color, and merge what is left back together.  Live strand counts
therefore track the number of proper colorings of the vertex prefix instead of
k**n.  The monolithic mode materializes all k**n total assignments up front
and filters per edge and color, which is exactly the blow-up the incremental
mode exists to avoid; it refuses to run past a configurable strand budget.

Bad-tube policy (fixed, and what the operation counts are stated against):
each Extract emits a fresh matching tube; per vertex and color those are
gathered with one Merge into a single bad tube, which is then Discarded.  Per
run that costs, beyond the n survivor merges, k merges and k discards for
every vertex with at least one earlier neighbor in the run order, and one
final Detect on the survivor tube.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import oracle
from .codec import (
    BLANK_STRAND,
    Codebook,
    Strand,
    SoundnessError,
    color_name,
    coloring_from_strand,
)
from .graphs import Graph
from .machine import MATCH_MODES, OpCounter, TubeMachine

DEFAULT_STRAND_BUDGET = 2_000_000


class SolverError(ValueError):
    pass


class BudgetError(SolverError):
    pass


@dataclass(frozen=True)
class StepRecord:
    vertex: int
    t0_before: int
    per_color_after_append: tuple[int, ...]
    per_color_after_filter: tuple[int, ...]
    discarded: int
    t0_after: int


@dataclass(frozen=True)
class Trace:
    steps: tuple[StepRecord, ...]
    op_totals: OpCounter
    peak_tube_size: int
    construction: str | None = None  # "synthetic" when the start tube was not built stepwise


@dataclass(frozen=True)
class SolutionSet:
    colorings: frozenset[tuple[int, ...]]
    colorable: bool

    def sorted_colorings(self) -> list[tuple[int, ...]]:
        return sorted(self.colorings)


def _check_inputs(g: Graph, k: int, cb: Codebook, match_mode: str) -> None:
    if k < 1:
        raise SolverError(f"color count must be positive, got {k}")
    if cb.n < g.n or cb.k < k:
        raise SolverError(
            f"codebook covers {cb.n} vertices x {cb.k} colors, "
            f"run needs {g.n} x {k}"
        )
    if match_mode not in MATCH_MODES:
        raise SolverError(f"unknown match mode {match_mode!r}")
    if match_mode == "nucleotide" and not cb.validation().ok:
        raise SoundnessError("nucleotide matching refused: codebook failed validation")


def _resolve_order(g: Graph, order) -> list[int]:
    if order is None:
        return list(range(1, g.n + 1))
    order = list(order)
    if sorted(order) != list(range(1, g.n + 1)):
        raise SolverError(f"order must be a permutation of 1..{g.n}, got {order}")
    return order


def _decode_final(tube, n: int) -> frozenset[tuple[int, ...]]:
    return frozenset(coloring_from_strand(s, n) for s in tube.contents)


def solve_incremental(
    g: Graph,
    k: int,
    cb: Codebook,
    match_mode: str = "symbolic",
    order=None,
) -> tuple[SolutionSet, Trace]:
    """Build the solution space vertex by vertex, pruning as edges close.

    Returns the decoded solution set (colorings re-indexed to natural vertex
    order) and a trace with one StepRecord per vertex.
    """
    _check_inputs(g, k, cb, match_mode)
    order = _resolve_order(g, order)
    adj = g.adjacency()
    machine = TubeMachine()
    # A lone blank strand seeds the survivor tube: Append extends what exists,
    # so an empty tube would stay empty forever.
    t0 = machine.new_tube("T0", [BLANK_STRAND])
    steps = []
    for idx, v in enumerate(order):
        t0_before = len(t0)
        color_tubes = machine.copy(t0, k)
        for c in range(k):
            color_tubes[c].label = f"{color_name(c)}@{v}"
            machine.append(color_tubes[c], cb.codeword(v, c))
        after_append = tuple(len(t) for t in color_tubes)
        bad_outputs: list[list] = [[] for _ in range(k)]
        for u in order[:idx]:
            if u in adj[v]:
                for c in range(k):
                    bad, keep = machine.extract(color_tubes[c], cb.codeword(u, c), match_mode, cb)
                    color_tubes[c] = keep
                    bad_outputs[c].append(bad)
        after_filter = tuple(len(t) for t in color_tubes)
        machine.merge(t0, color_tubes)
        discarded = 0
        for c in range(k):
            if bad_outputs[c]:
                bad_tube = machine.new_tube(f"{color_name(c)}_bad@{v}")
                machine.merge(bad_tube, bad_outputs[c])
                discarded += len(bad_tube)
                machine.discard(bad_tube)
        if len(set(t0.contents)) != len(t0.contents):
            raise SolverError(f"survivor tube holds a repeated strand after vertex {v}")
        steps.append(
            StepRecord(v, t0_before, after_append, after_filter, discarded, len(t0))
        )
    colorable = machine.detect(t0)
    solutions = SolutionSet(_decode_final(t0, g.n), colorable)
    trace = Trace(tuple(steps), machine.counter.snapshot(), machine.peak_tube_size)
    return solutions, trace


def solve_monolithic(
    g: Graph,
    k: int,
    cb: Codebook,
    match_mode: str = "symbolic",
    budget: int = DEFAULT_STRAND_BUDGET,
) -> tuple[SolutionSet, Trace]:
    """Materialize all k**n assignments, then filter per edge and color.

    The start tube is built combinatorially rather than through k**n Append
    calls, so the trace carries no step records and is marked synthetic; the
    filtering phase runs on the machine and is counted normally.
    """
    _check_inputs(g, k, cb, match_mode)
    total = k**g.n
    if total > budget:
        raise BudgetError(
            f"monolithic start tube needs {total} strands, over the budget of {budget}"
        )
    machine = TubeMachine()
    token_rows = [tuple((v, c) for c in range(k)) for v in range(1, g.n + 1)]
    tube = machine.new_tube("full", itertools.product(*token_rows))
    for u, v in g.sorted_edges():
        for c in range(k):
            with_u, rest = machine.extract(tube, cb.codeword(u, c), match_mode, cb)
            bad, u_only = machine.extract(with_u, cb.codeword(v, c), match_mode, cb)
            tube = machine.merge(rest, [u_only])
            machine.discard(bad)
    colorable = machine.detect(tube)
    solutions = SolutionSet(_decode_final(tube, g.n), colorable)
    trace = Trace(
        (), machine.counter.snapshot(), machine.peak_tube_size, construction="synthetic"
    )
    return solutions, trace


def step_census(g: Graph, k: int, order, i: int) -> int:
    """Proper k-colorings of the subgraph induced by the first i vertices of order.

    This is what the survivor tube's size must equal after step i of an
    incremental run with the same order.
    """
    order = _resolve_order(g, order)
    if not (1 <= i <= g.n):
        raise SolverError(f"step index must be in 1..{g.n}, got {i}")
    position = {v: j + 1 for j, v in enumerate(order[:i])}
    edges = [
        (min(position[u], position[v]), max(position[u], position[v]))
        for u, v in g.edges
        if u in position and v in position
    ]
    return oracle.count_colorings(Graph.from_edges(i, edges), k)


TRACE_FIELDS = frozenset(
    {"graph", "k", "order", "mode", "steps", "op_totals", "peak_tube_size", "colorable", "solutions"}
)
STEP_FIELDS = frozenset(
    {"vertex", "t0_before", "per_color_after_append", "per_color_after_filter", "discarded", "t0_after"}
)


def trace_document(
    g: Graph, k: int, order, mode: str, solutions: SolutionSet, trace: Trace
) -> dict:
    """The JSON form of one run; field names here are a stable contract."""
    doc = {
        "graph": {"n": g.n, "m": g.m},
        "k": k,
        "order": list(order) if order is not None else list(range(1, g.n + 1)),
        "mode": mode,
        "steps": [
            {
                "vertex": s.vertex,
                "t0_before": s.t0_before,
                "per_color_after_append": list(s.per_color_after_append),
                "per_color_after_filter": list(s.per_color_after_filter),
                "discarded": s.discarded,
                "t0_after": s.t0_after,
            }
            for s in trace.steps
        ],
        "op_totals": trace.op_totals.as_dict(),
        "peak_tube_size": trace.peak_tube_size,
        "colorable": solutions.colorable,
        "solutions": [list(c) for c in solutions.sorted_colorings()],
    }
    if trace.construction is not None:
        doc["construction"] = trace.construction
    return doc


def read_trace_document(doc: dict) -> tuple[dict, SolutionSet, Trace]:
    """Parse and check a trace document; inverse of trace_document.

    Returns (meta, solutions, trace) where meta carries graph/k/order/mode.
    """
    if not isinstance(doc, dict):
        raise SolverError("trace document must be a JSON object")
    missing = TRACE_FIELDS - doc.keys()
    if missing:
        raise SolverError(f"trace document missing fields: {sorted(missing)}")
    graph = doc["graph"]
    if not isinstance(graph, dict) or {"n", "m"} - graph.keys():
        raise SolverError("trace graph must carry n and m")
    steps = []
    for entry in doc["steps"]:
        entry_missing = STEP_FIELDS - entry.keys()
        if entry_missing:
            raise SolverError(f"step record missing fields: {sorted(entry_missing)}")
        steps.append(
            StepRecord(
                entry["vertex"],
                entry["t0_before"],
                tuple(entry["per_color_after_append"]),
                tuple(entry["per_color_after_filter"]),
                entry["discarded"],
                entry["t0_after"],
            )
        )
    op_totals = OpCounter(**doc["op_totals"])
    meta = {
        "graph": {"n": graph["n"], "m": graph["m"]},
        "k": doc["k"],
        "order": list(doc["order"]),
        "mode": doc["mode"],
    }
    solutions = SolutionSet(
        frozenset(tuple(c) for c in doc["solutions"]), bool(doc["colorable"])
    )
    trace = Trace(
        tuple(steps), op_totals, doc["peak_tube_size"], doc.get("construction")
    )
    return meta, solutions, trace
