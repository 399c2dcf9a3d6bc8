"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                    Exact Trapping-Set Search                                     │
│                                                                                                  │
│  Description: Depth-first subset search with incremental check-degree bookkeeping and admissible │
│               pruning for Min-b, Min-a and class enumeration, optionally split across workers.   │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import itertools
import logging
import math
import time
from typing import List, NamedTuple, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from config.settings import get_settings
from models.search import (
    ClassEntry,
    EnumerationResult,
    SearchBudget,
    SearchProblem,
    SearchResult,
    SearchStatus,
)
from models.tanner_graph import TannerGraph, TrappingSetKind
from services.tanner_core import is_connected, regularity, subset_profile
from utils.errors import SearchError

logger = logging.getLogger(__name__)

# How often (in nodes) the wall clock is consulted
CLOCK_INTERVAL = 1024


class _Found(Exception):
    pass


class _OutOfBudget(Exception):
    pass


class _Goal(NamedTuple):
    kind: TrappingSetKind
    size_lo: int
    size_hi: int
    b_mode: str  # "min", "exact" or "at_most"
    b_value: int
    prune: bool
    max_nodes: Optional[int]
    deadline: Optional[float]


class _Outcome(NamedTuple):
    best_b: Optional[int]
    witness: Optional[Tuple[int, ...]]
    entries: List[Tuple[int, int, Tuple[int, ...]]]
    nodes: int
    capped: bool
    exhausted: bool


class _SubsetSearch:
    """One depth-first pass over variable indices in ascending order.

    Including before excluding visits same-size subsets in lexicographic order,
    so the first witness accepted is the lexicographically smallest. For every
    check the search tracks its degree in G(S) and how many of its neighbors
    are still undecided; a check is locked once that count reaches zero.
    """

    def __init__(self, graph: TannerGraph, goal: _Goal):
        self.var_adj = graph.var_adj
        self.chk_adj = graph.chk_adj
        self.n = graph.n_var
        self.goal = goal

        self.deg = [0] * graph.n_chk
        self.rem = [len(a) for a in graph.chk_adj]
        self.in_s = [False] * self.n
        self.chosen: List[int] = []
        self.odd = 0
        self.odd_locked = 0
        self.open = sum(1 for r in self.rem if r)
        self.over = 0

        self.nodes = 0
        self.capped = False
        self.best_b = goal.b_value if goal.b_mode == "min" else None
        self.witness: Optional[Tuple[int, ...]] = None
        self.entries: List[Tuple[int, int, Tuple[int, ...]]] = []

        kind = goal.kind
        self.use_cap = goal.prune and kind.is_elementary
        self.use_leaves = goal.prune and kind == TrappingSetKind.LETS
        self.use_majority = goal.prune and kind in (TrappingSetKind.ABS, TrappingSetKind.EABS)

    # bookkeeping

    def _move(self, c: int, dd: int, dr: int) -> None:
        d, r = self.deg[c], self.rem[c]
        if d & 1:
            self.odd -= 1
            if not r:
                self.odd_locked -= 1
        if r:
            self.open -= 1
        if d >= 3:
            self.over -= 1
        d += dd
        r += dr
        self.deg[c], self.rem[c] = d, r
        if d & 1:
            self.odd += 1
            if not r:
                self.odd_locked += 1
        if r:
            self.open += 1
        if d >= 3:
            self.over += 1

    def _decide(self, u: int, include: bool) -> None:
        for c in self.var_adj[u]:
            self._move(c, 1 if include else 0, -1)
        if include:
            self.in_s[u] = True
            self.chosen.append(u)

    def _undo(self, u: int, include: bool) -> None:
        for c in self.var_adj[u]:
            self._move(c, -1 if include else 0, 1)
        if include:
            self.in_s[u] = False
            self.chosen.pop()

    def _tick(self) -> None:
        self.nodes += 1
        goal = self.goal
        if goal.max_nodes is not None and self.nodes > goal.max_nodes:
            raise _OutOfBudget
        if goal.deadline is not None and not self.nodes % CLOCK_INTERVAL and time.time() > goal.deadline:
            raise _OutOfBudget

    # pruning

    def _member_viable(self, v: int) -> bool:
        deg, rem = self.deg, self.rem
        if self.use_leaves:
            support = 0
            for c in self.var_adj[v]:
                d = deg[c]
                if d == 2 or (d == 1 and rem[c]):
                    support += 1
            if support < 2:
                return False
        if self.use_majority:
            even = odd = 0
            for c in self.var_adj[v]:
                if rem[c] or not deg[c] & 1:
                    even += 1
                else:
                    odd += 1
            if even <= odd:
                return False
        return True

    def _viable(self, u: int) -> bool:
        """False only when no completion of the current partial subset can qualify"""
        goal = self.goal
        if not goal.prune:
            return True
        if self.use_cap and self.over:
            return False
        if goal.b_mode == "min":
            if self.odd_locked >= self.best_b:
                return False
        elif goal.b_mode == "exact":
            if self.odd_locked > goal.b_value or self.odd_locked + self.open < goal.b_value:
                return False
        elif self.odd_locked > goal.b_value:
            return False
        if self.use_leaves or self.use_majority:
            touched = {v for c in self.var_adj[u] for v in self.chk_adj[c] if self.in_s[v]}
            for v in touched:
                if not self._member_viable(v):
                    return False
        return True

    # evaluation of the current subset as a finished set

    def _qualifies(self) -> bool:
        kind = self.goal.kind
        if kind.is_elementary and self.over:
            return False
        deg = self.deg
        if kind == TrappingSetKind.LETS:
            for v in self.chosen:
                if sum(1 for c in self.var_adj[v] if deg[c] == 2) < 2:
                    return False
        elif kind in (TrappingSetKind.ABS, TrappingSetKind.EABS):
            for v in self.chosen:
                odd = sum(1 for c in self.var_adj[v] if deg[c] & 1)
                if len(self.var_adj[v]) - odd <= odd:
                    return False
        return True

    def _report(self) -> None:
        goal = self.goal
        b = self.odd
        if goal.b_mode == "min" and b >= self.best_b:
            return
        if goal.b_mode == "exact" and b != goal.b_value:
            return
        if goal.b_mode == "at_most" and b > goal.b_value:
            return
        if not self._qualifies():
            return
        subset = tuple(self.chosen)
        if goal.b_mode == "at_most":
            self.entries.append((len(subset), b, subset))
            return
        self.best_b = b
        self.witness = subset
        if goal.b_mode == "exact":
            raise _Found

    def _descend(self, pos: int, k: int) -> None:
        """Explicit-stack walk; each frame is (position, size so far, stage).

        Stage 0 takes the include branch, stage 1 the exclude branch and
        stage 2 restores the exclude decision.
        """
        goal = self.goal
        n = self.n
        stack = [(pos, k, 0)]
        while stack:
            pos, k, stage = stack.pop()
            if stage == 0:
                self._tick()
                if pos == n or k + (n - pos) < goal.size_lo:
                    continue
                self._decide(pos, True)
                stack.append((pos, k, 1))
                if self._viable(pos):
                    if k + 1 >= goal.size_lo:
                        self._report()
                    if k + 1 < goal.size_hi:
                        stack.append((pos + 1, k + 1, 0))
                    elif pos + 1 < n:
                        self.capped = True
            elif stage == 1:
                self._undo(pos, True)
                self._decide(pos, False)
                stack.append((pos, k, 2))
                if self._viable(pos):
                    stack.append((pos + 1, k, 0))
            else:
                self._undo(pos, False)

    def run(self, prefix: Sequence[bool]) -> _Outcome:
        """Search the subtree below a fixed include/exclude prefix"""
        goal = self.goal
        exhausted = False
        try:
            k = 0
            alive = True
            for u, include in enumerate(prefix):
                self._tick()
                self._decide(u, include)
                k += include
                if k > goal.size_hi or not self._viable(u):
                    alive = False
                    break
            if alive and k + (self.n - len(prefix)) >= goal.size_lo:
                # Sets whose largest member lies inside the prefix belong to this partition only
                if k and goal.size_lo <= k:
                    self._report()
                if k < goal.size_hi:
                    self._descend(len(prefix), k)
                elif len(prefix) < self.n:
                    self.capped = True
        except _Found:
            pass
        except _OutOfBudget:
            exhausted = True
        return _Outcome(
            best_b=self.best_b if self.witness is not None else None,
            witness=self.witness,
            entries=self.entries,
            nodes=self.nodes,
            capped=self.capped,
            exhausted=exhausted,
        )


def _run_partition(graph: TannerGraph, goal: _Goal, prefix: Tuple[bool, ...]) -> _Outcome:
    return _SubsetSearch(graph, goal).run(prefix)


def _prefixes(n_var: int, threads: int) -> List[Tuple[bool, ...]]:
    """Fixed decision prefixes, include-first, so their order is lexicographic"""
    if threads <= 1 or n_var == 0:
        return [()]
    depth = min(n_var, math.ceil(math.log2(threads)) + 1)
    return list(itertools.product((True, False), repeat=depth))


def _execute(graph: TannerGraph, goal: _Goal, threads: int) -> List[_Outcome]:
    prefixes = _prefixes(graph.n_var, threads)
    if len(prefixes) == 1:
        return [_run_partition(graph, goal, prefixes[0])]
    if goal.max_nodes is not None:
        # Partitions share the node budget evenly
        goal = goal._replace(max_nodes=max(1, goal.max_nodes // len(prefixes)))
    logger.debug(f"Splitting search into {len(prefixes)} partitions over {threads} workers")
    return Parallel(n_jobs=threads)(delayed(_run_partition)(graph, goal, p) for p in prefixes)


def _first_witness(outcomes: Sequence[_Outcome]) -> Tuple[Optional[_Outcome], bool]:
    """Lexicographically first witness and whether an earlier partition ran out of budget"""
    exhausted_before = False
    for outcome in outcomes:
        if outcome.witness is not None:
            return outcome, exhausted_before
        exhausted_before = exhausted_before or outcome.exhausted
    return None, exhausted_before


def _resolve(budget: Optional[SearchBudget], threads: Optional[int]) -> Tuple[SearchBudget, int]:
    settings = get_settings()
    if budget is None:
        budget = SearchBudget(max_nodes=settings.max_nodes, max_seconds=settings.max_seconds)
    return budget, threads or settings.threads


def _deadline(budget: SearchBudget) -> Optional[float]:
    return time.time() + budget.max_seconds if budget.max_seconds else None


def _notes(graph: TannerGraph, kind: TrappingSetKind) -> Tuple[str, ...]:
    notes = []
    if kind not in (TrappingSetKind.LETS, TrappingSetKind.EABS):
        notes.append(f"{kind.value} search extends the LETS/EABS problems")
    if not regularity(graph).is_regular:
        notes.append(
            "input graph is not (alpha, beta)-regular; the problems are stated for regular graphs"
        )
    if not is_connected(graph):
        notes.append("input graph is disconnected")
    return tuple(notes)


def _confirm(graph: TannerGraph, result: SearchResult) -> SearchResult:
    if result.witness is not None:
        profile = subset_profile(graph, result.witness)
        if not profile.flags.has(result.kind) or profile.b != result.b:
            raise SearchError(
                f"witness {result.witness} does not re-classify as an ({result.a},{result.b}) "
                f"{result.kind.value}"
            )
    return result


def min_b(
    graph: TannerGraph,
    a: int,
    kind: TrappingSetKind = TrappingSetKind.LETS,
    budget: Optional[SearchBudget] = None,
    prune: bool = True,
    threads: Optional[int] = None,
) -> SearchResult:
    """Least b such that an (a, b) set of `kind` exists"""
    kind = TrappingSetKind(kind)
    if a < 1:
        raise SearchError(f"a must be a positive integer, got {a}")
    budget, threads = _resolve(budget, threads)
    started = time.perf_counter()
    common = dict(problem=SearchProblem.MIN_B, kind=kind, a=a, threads=threads, pruning=prune)
    notes = _notes(graph, kind)

    if budget.max_subset_size is not None and a > budget.max_subset_size:
        return SearchResult(
            status=SearchStatus.BUDGET_EXCEEDED,
            notes=notes + (f"a={a} exceeds max_subset_size={budget.max_subset_size}",),
            **common,
        )
    if a > graph.n_var:
        return SearchResult(status=SearchStatus.INFEASIBLE, notes=notes, **common)

    goal = _Goal(kind, a, a, "min", graph.n_chk + 1, prune, budget.max_nodes, _deadline(budget))
    outcomes = _execute(graph, goal, threads)
    nodes = sum(o.nodes for o in outcomes)
    exhausted = any(o.exhausted for o in outcomes)
    best = min(((o.best_b, o.witness) for o in outcomes if o.witness is not None), default=None)

    if exhausted:
        status = SearchStatus.BUDGET_EXCEEDED
        logger.warning(f"min_b(a={a}, {kind.value}) ran out of budget after {nodes} nodes")
    else:
        status = SearchStatus.FOUND if best else SearchStatus.INFEASIBLE
    result = SearchResult(
        status=status,
        b=best[0] if best else None,
        witness=best[1] if best else None,
        nodes_expanded=nodes,
        elapsed_seconds=time.perf_counter() - started,
        notes=notes,
        **common,
    )
    logger.info(f"min_b(a={a}, {kind.value}): {status.value}, b={result.b}, {nodes} nodes")
    return _confirm(graph, result)


def min_a(
    graph: TannerGraph,
    b: int,
    kind: TrappingSetKind = TrappingSetKind.LETS,
    budget: Optional[SearchBudget] = None,
    prune: bool = True,
    threads: Optional[int] = None,
    a_max: Optional[int] = None,
) -> SearchResult:
    """Least positive a such that an (a, b) set of `kind` exists, by iterative deepening.

    Deepening stops as soon as a level completes without any branch reaching the
    size bound: the next level would explore the same tree. With `a_max` the
    question becomes whether some a <= a_max exists, and a miss is infeasible.
    The node budget covers all levels together.
    """
    kind = TrappingSetKind(kind)
    if b < 0:
        raise SearchError(f"b must be non-negative, got {b}")
    if a_max is not None and a_max < 1:
        raise SearchError(f"a_max must be a positive integer, got {a_max}")
    budget, threads = _resolve(budget, threads)
    started = time.perf_counter()
    common = dict(problem=SearchProblem.MIN_A, kind=kind, b=b, threads=threads, pruning=prune)
    notes = _notes(graph, kind)

    def finish(status: SearchStatus, nodes: int, **fields) -> SearchResult:
        result = SearchResult(
            status=status,
            nodes_expanded=nodes,
            elapsed_seconds=time.perf_counter() - started,
            **{"notes": notes, **common, **fields},
        )
        logger.info(f"min_a(b={b}, {kind.value}): {status.value}, a={result.a}, {nodes} nodes")
        return _confirm(graph, result)

    if b > graph.n_chk:
        return finish(SearchStatus.INFEASIBLE, 0)

    limit = graph.n_var if a_max is None else min(graph.n_var, a_max)
    size_capped = budget.max_subset_size is not None and budget.max_subset_size < limit
    if size_capped:
        limit = budget.max_subset_size
    deadline = _deadline(budget)
    nodes = 0
    for a in range(1, limit + 1):
        level_budget = None if budget.max_nodes is None else budget.max_nodes - nodes
        if level_budget is not None and level_budget < 1:
            logger.warning(f"min_a(b={b}, {kind.value}) ran out of budget at a={a}")
            return finish(SearchStatus.BUDGET_EXCEEDED, nodes)
        goal = _Goal(kind, a, a, "exact", b, prune, level_budget, deadline)
        outcomes = _execute(graph, goal, threads)
        level_nodes = sum(o.nodes for o in outcomes)
        nodes += level_nodes
        logger.debug(f"min_a level a={a}: {level_nodes} nodes")

        winner, exhausted_before = _first_witness(outcomes)
        if winner is not None:
            status = SearchStatus.BUDGET_EXCEEDED if exhausted_before else SearchStatus.FOUND
            return finish(status, nodes, a=a, witness=winner.witness)
        if any(o.exhausted for o in outcomes):
            logger.warning(f"min_a(b={b}, {kind.value}) ran out of budget at a={a}")
            return finish(SearchStatus.BUDGET_EXCEEDED, nodes)
        if not any(o.capped for o in outcomes):
            return finish(SearchStatus.INFEASIBLE, nodes)

    if size_capped:
        return finish(
            SearchStatus.BUDGET_EXCEEDED,
            nodes,
            notes=notes + (f"no set up to max_subset_size={limit}",),
        )
    if limit < graph.n_var:
        return finish(SearchStatus.INFEASIBLE, nodes, notes=notes + (f"no set with a <= {limit}",))
    return finish(SearchStatus.INFEASIBLE, nodes)


def enumerate_class(
    graph: TannerGraph,
    a_max: int,
    b_max: int,
    kind: TrappingSetKind = TrappingSetKind.LETS,
    budget: Optional[SearchBudget] = None,
    prune: bool = True,
    threads: Optional[int] = None,
) -> EnumerationResult:
    """Every set of `kind` with 1 <= a <= a_max and b <= b_max"""
    kind = TrappingSetKind(kind)
    if a_max < 0 or b_max < 0:
        raise SearchError("a_max and b_max must be non-negative")
    budget, threads = _resolve(budget, threads)
    started = time.perf_counter()
    notes = _notes(graph, kind)

    cap = min(a_max, graph.n_var)
    truncated = budget.max_subset_size is not None and cap > budget.max_subset_size
    if truncated:
        cap = budget.max_subset_size
        notes += (f"sizes above max_subset_size={cap} were not searched",)

    entries: List[Tuple[int, int, Tuple[int, ...]]] = []
    nodes = 0
    exhausted = False
    if cap >= 1:
        goal = _Goal(kind, 1, cap, "at_most", b_max, prune, budget.max_nodes, _deadline(budget))
        outcomes = _execute(graph, goal, threads)
        for outcome in outcomes:
            entries.extend(outcome.entries)
        nodes = sum(o.nodes for o in outcomes)
        exhausted = any(o.exhausted for o in outcomes)
    entries.sort()

    if exhausted or truncated:
        status = SearchStatus.BUDGET_EXCEEDED
    else:
        status = SearchStatus.FOUND if entries else SearchStatus.INFEASIBLE
    logger.info(
        f"enumerate_class({kind.value}, a<={a_max}, b<={b_max}): "
        f"{len(entries)} sets, {status.value}"
    )
    return EnumerationResult(
        kind=kind,
        a_max=a_max,
        b_max=b_max,
        status=status,
        entries=tuple(ClassEntry(a=a, b=b, witness=w) for a, b, w in entries),
        nodes_expanded=nodes,
        elapsed_seconds=time.perf_counter() - started,
        threads=threads,
        pruning=prune,
        notes=notes,
    )
