"""Exact-cover search for directed cycle and path double covers.

The engine is a generalized Algorithm X over columns with multiplicities:
arc columns need one hit, CDC edge columns need two, OPPDC start/end slots
need one.  Rows are directed cycles or paths.  Column choice is
minimum-remaining-values; all iteration orders are sorted, so outcomes are
deterministic.  Exceeding a budget yields Unresolved, never NoneExists.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .graphs import (Graph, bridges, is_bridgeless, nontrivial_3_edge_cuts,
                     vertex_connectivity_at_most)
from .covers import (CoverCertificate, DirectedCycle, DirectedPath, Infeasible,
                     orient_cdc, verify_cdc, verify_ocdc, verify_oppdc)


class BudgetExceeded(Exception):
    pass


@dataclass
class Budget:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds of wall clock

    def copy(self) -> "Budget":
        return Budget(self.node_limit, self.time_limit)

    def deadline(self) -> Optional[float]:
        return None if self.time_limit is None else time.monotonic() + self.time_limit


@dataclass
class SearchOutcome:
    status: str  # Found | NoneExists | Unresolved
    certificate: Optional[CoverCertificate] = None
    lower_bound: int = 0
    nodes_expanded: int = 0
    budget: Budget = field(default_factory=Budget)

    @property
    def found(self) -> bool:
        return self.status == "Found"


class CoverEngine:
    """Exact cover with column multiplicities and a row-count cap.

    rows: sequence of column-id tuples.  weight(r) counts the row's
    weighted columns (arcs); together with max_weight it drives the
    lower-bound prune  ceil(remaining_weighted / max_weight) <= rows_left.
    """

    def __init__(self, col_need: dict, rows: Sequence[tuple], weights: Sequence[int],
                 weighted_cols: set):
        self.col_need = dict(col_need)
        self.rows = [tuple(r) for r in rows]
        self.weights = list(weights)
        self.weighted_cols = set(weighted_cols)
        self.max_weight = max(weights, default=1) or 1
        self.rows_by_col: dict = {c: [] for c in col_need}
        for ri, cols in enumerate(self.rows):
            for c in cols:
                self.rows_by_col[c].append(ri)
        self.nodes = 0

    def solutions(self, max_rows: int, node_limit: Optional[int] = None,
                  deadline: Optional[float] = None) -> Iterator[list[int]]:
        """Yield covers as sorted row-index lists (repetition allowed)."""
        need = dict(self.col_need)
        blocked = [0] * len(self.rows)  # count of this row's columns at need 0
        remaining_weighted = sum(need[c] for c in need if c in self.weighted_cols)
        chosen: list[int] = []
        self.nodes = 0

        def consume(ri: int, sign: int):
            nonlocal remaining_weighted
            for c in self.rows[ri]:
                if sign > 0:
                    need[c] -= 1
                    if c in self.weighted_cols:
                        remaining_weighted -= 1
                    if need[c] == 0:
                        for r2 in self.rows_by_col[c]:
                            blocked[r2] += 1
                else:
                    if need[c] == 0:
                        for r2 in self.rows_by_col[c]:
                            blocked[r2] -= 1
                    need[c] += 1
                    if c in self.weighted_cols:
                        remaining_weighted += 1

        def rec() -> Iterator[list[int]]:
            open_cols = [c for c, k in need.items() if k > 0]
            if not open_cols:
                yield sorted(chosen)
                return
            rows_left = max_rows - len(chosen)
            if rows_left <= 0:
                return
            if remaining_weighted > rows_left * self.max_weight:
                return
            best_col, best_cands = None, None
            for c in sorted(open_cols, key=repr):
                cands = [r for r in self.rows_by_col[c] if blocked[r] == 0]
                if best_cands is None or len(cands) < len(best_cands):
                    best_col, best_cands = c, cands
                    if not cands:
                        return
            for ri in best_cands:
                self.nodes += 1
                if node_limit is not None and self.nodes > node_limit:
                    raise BudgetExceeded
                if deadline is not None and self.nodes % 512 == 0 \
                        and time.monotonic() > deadline:
                    raise BudgetExceeded
                consume(ri, +1)
                chosen.append(ri)
                yield from rec()
                chosen.pop()
                consume(ri, -1)

        yield from rec()

    def first_solution(self, max_rows: int, node_limit: Optional[int] = None,
                       deadline: Optional[float] = None) -> Optional[list[int]]:
        for sol in self.solutions(max_rows, node_limit, deadline):
            return sol
        return None


# ---------------------------------------------------------------------------
# Row generators
# ---------------------------------------------------------------------------

def enumerate_undirected_cycles(g: Graph, max_len: Optional[int] = None) -> list[DirectedCycle]:
    """All simple cycles, one reference direction each, ordered by length
    then lexicographic vertex sequence.

    Each cycle is anchored at its least vertex with second vertex smaller
    than the last, which fixes the reference direction.
    """
    cap = max_len if max_len is not None else g.n
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]):
        u = path[-1]
        root = path[0]
        for w in g.neighbors(u):
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > root and w not in on_path and len(path) < cap:
                on_path.add(w)
                path.append(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for root in range(g.n):
        extend([root], {root})
    out.sort(key=lambda vs: (len(vs), vs))
    return [DirectedCycle(vs) for vs in out]


def enumerate_directed_cycles(g: Graph, max_len: Optional[int] = None) -> list[DirectedCycle]:
    """All simple directed cycles of the symmetric orientation in canonical
    form, ordered by length then lexicographic."""
    both = []
    for c in enumerate_undirected_cycles(g, max_len):
        both.append(c.vertices)
        both.append(c.reversed().canonical().vertices)
    both.sort(key=lambda vs: (len(vs), vs))
    return [DirectedCycle(vs) for vs in both]


def enumerate_directed_paths(g: Graph) -> list[DirectedPath]:
    """All simple directed paths, including the n degenerate ones, ordered
    by length then lexicographic."""
    out: list[tuple[int, ...]] = [(v,) for v in range(g.n)]

    def extend(path: list[int], on_path: set[int]):
        for w in g.neighbors(path[-1]):
            if w not in on_path:
                on_path.add(w)
                path.append(w)
                out.append(tuple(path))
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for v in range(g.n):
        extend([v], {v})
    out.sort(key=lambda vs: (len(vs), vs))
    return [DirectedPath(vs) for vs in out]


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------

def _ocdc_engine(g: Graph) -> tuple[CoverEngine, list[DirectedCycle]]:
    rows = enumerate_directed_cycles(g)
    arcs = set(g.arcs())
    engine = CoverEngine({a: 1 for a in arcs},
                         [c.arcs() for c in rows],
                         [len(c) for c in rows],
                         arcs)
    return engine, rows


def min_ocdc(g: Graph, max_count: int, node_budget: Optional[int] = None,
             time_budget: Optional[float] = None,
             prove_minimum: bool = True) -> SearchOutcome:
    """Minimum-size OCDC by iterative deepening on the cycle count.

    Found at k proves no cover of size < k exists; NoneExists means the
    whole space up to max_count was exhausted.  With prove_minimum False
    the search goes straight to max_count and only settles existence.
    """
    if not is_bridgeless(g):
        raise ValueError("OCDC search requires a bridgeless graph")
    engine, rows = _ocdc_engine(g)
    longest = max((len(c) for c in rows), default=1)
    lower = max(1, math.ceil(2 * g.m / longest))
    if not prove_minimum:
        lower = max(lower, max_count)
    nodes_total = 0
    budget = Budget(node_budget, time_budget)
    deadline = budget.deadline()
    for k in range(lower, max_count + 1):
        try:
            limit = None if node_budget is None else node_budget - nodes_total
            sol = engine.first_solution(k, limit, deadline)
        except BudgetExceeded:
            return SearchOutcome("Unresolved", None, lower,
                                 nodes_total + engine.nodes, budget)
        nodes_total += engine.nodes
        if sol is not None:
            cycles = [rows[i] for i in sol]
            assert verify_ocdc(g, cycles).ok
            cert = CoverCertificate(g, "SOCDC" if len(cycles) <= g.n - 1 else "OCDC",
                                    cycles, f"min_ocdc k={k}")
            return SearchOutcome("Found", cert, k, nodes_total, budget)
        lower = k + 1
    return SearchOutcome("NoneExists", None, lower, nodes_total, budget)


def find_socdc(g: Graph, node_budget: Optional[int] = None,
               time_budget: Optional[float] = None,
               prove_minimum: bool = True) -> SearchOutcome:
    """An OCDC with at most n-1 cycles, or proof none exists."""
    out = min_ocdc(g, g.n - 1, node_budget, time_budget, prove_minimum)
    if out.found:
        assert out.certificate is not None and out.certificate.kind == "SOCDC"
    return out


def find_oppdc(g: Graph, node_budget: Optional[int] = None,
               time_budget: Optional[float] = None) -> SearchOutcome:
    """An oriented perfect path double cover by exact cover over arcs plus
    one start slot and one end slot per vertex."""
    if not g.is_connected():
        raise ValueError("OPPDC search requires a connected graph")
    rows = enumerate_directed_paths(g)
    if g.n >= 2:
        rows = [p for p in rows if len(p) > 1]
    arcs = set(g.arcs())
    need = {a: 1 for a in arcs}
    for v in range(g.n):
        need[("s", v)] = 1
        need[("e", v)] = 1
    cols = [tuple(p.arcs()) + (("s", p.start), ("e", p.end)) for p in rows]
    engine = CoverEngine(need, cols, [max(len(p) - 1, 0) for p in rows], arcs)
    budget = Budget(node_budget, time_budget)
    try:
        sol = engine.first_solution(g.n, node_budget, budget.deadline())
    except BudgetExceeded:
        return SearchOutcome("Unresolved", None, 0, engine.nodes, budget)
    if sol is None:
        return SearchOutcome("NoneExists", None, g.n + 1, engine.nodes, budget)
    paths = [rows[i] for i in sol]
    assert verify_oppdc(g, paths).ok
    cert = CoverCertificate(g, "OPPDC", paths, "find_oppdc")
    return SearchOutcome("Found", cert, len(paths), engine.nodes, budget)


def enumerate_cdcs(g: Graph, node_budget: Optional[int] = None,
                   max_count: Optional[int] = None) -> Iterator[list[DirectedCycle]]:
    """Stream CDCs (reference-directed cycles, each edge covered twice)."""
    rows = enumerate_undirected_cycles(g)
    edges = set(g.edges)
    engine = CoverEngine({e: 2 for e in edges},
                         [c.edges() for c in rows],
                         [len(c) for c in rows],
                         edges)
    cap = max_count if max_count is not None else 2 * g.m // 3
    for sol in engine.solutions(cap, node_budget):
        yield [rows[i] for i in sol]


def find_unorientable_cdc(g: Graph, node_budget: Optional[int] = None
                          ) -> Optional[tuple[list[DirectedCycle], Infeasible]]:
    """First CDC (in deterministic enumeration order) whose parity system
    is infeasible, together with the odd-chain witness; None if the space
    was exhausted without one."""
    if not is_bridgeless(g):
        raise ValueError("CDC search requires a bridgeless graph")
    for cdc in enumerate_cdcs(g, node_budget):
        res = orient_cdc(g, cdc)
        if isinstance(res, Infeasible):
            return cdc, res
    return None


# ---------------------------------------------------------------------------
# Minimal-counterexample screening
# ---------------------------------------------------------------------------

def _edge_connectivity_at_least_3(g: Graph) -> bool:
    if bridges(g):
        return False
    for pair in itertools.combinations(g.sorted_edges(), 2):
        removed = frozenset(pair)
        if len(g._component(0, removed_edges=removed)) < g.n:
            return False
    return True


def counterexample_filter(g: Graph) -> list[str]:
    """Necessary conditions a minimal counterexample to the small-cover
    conjecture must satisfy; returns the ones g violates."""
    failed = []
    if g.n == 4 and g.m == 6:
        failed.append("is the exception K4")
    if g.n == 6 and g.m == 15:
        failed.append("is the exception K6")
    if not g.is_connected() or g.n < 3 or vertex_connectivity_at_most(g, 1) is not None:
        failed.append("not 2-connected")
        return failed
    if any(g.degree(v) < 3 for v in range(g.n)):
        failed.append("minimum degree below 3")
    if vertex_connectivity_at_most(g, 2) is not None:
        failed.append("not 3-connected")
    if not _edge_connectivity_at_least_3(g):
        failed.append("not 3-edge-connected")
    if nontrivial_3_edge_cuts(g):
        failed.append("has a non-trivial 3-edge cut")
    return failed
