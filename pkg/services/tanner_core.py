"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                        Tanner Graph Core                                         │
│                                                                                                  │
│  Description: Graph construction, induced-subgraph profiling and trapping-set classification     │
│               (TS, ETS, LETS, ABS, EABS) over immutable Tanner graphs.                           │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from models.tanner_graph import ClassFlags, RegularityReport, SubsetProfile, TannerGraph
from utils.errors import GraphError

logger = logging.getLogger(__name__)


def build_graph(
    n_var: int,
    n_chk: int,
    edges: Iterable[Tuple[int, int]],
    var_labels: Optional[Sequence[str]] = None,
    chk_labels: Optional[Sequence[str]] = None,
) -> TannerGraph:
    """Build a simple Tanner graph from (variable, check) pairs"""
    if n_var < 0 or n_chk < 0:
        raise GraphError("node counts must be non-negative")

    var_adj: List[List[int]] = [[] for _ in range(n_var)]
    chk_adj: List[List[int]] = [[] for _ in range(n_chk)]
    seen = set()
    for v, c in edges:
        if not 0 <= v < n_var:
            raise GraphError(f"variable index {v} out of range [0, {n_var})")
        if not 0 <= c < n_chk:
            raise GraphError(f"check index {c} out of range [0, {n_chk})")
        if (v, c) in seen:
            raise GraphError(f"duplicate edge ({v}, {c}): Tanner graphs must be simple")
        seen.add((v, c))
        var_adj[v].append(c)
        chk_adj[c].append(v)

    return TannerGraph(
        n_var=n_var,
        n_chk=n_chk,
        var_adj=tuple(tuple(sorted(a)) for a in var_adj),
        chk_adj=tuple(tuple(sorted(a)) for a in chk_adj),
        var_labels=tuple(var_labels) if var_labels is not None else None,
        chk_labels=tuple(chk_labels) if chk_labels is not None else None,
    )


def _normalize_subset(graph: TannerGraph, subset: Iterable[int]) -> Tuple[int, ...]:
    members = tuple(sorted(set(subset)))
    for v in members:
        if not 0 <= v < graph.n_var:
            raise GraphError(f"variable index {v} out of range [0, {graph.n_var})")
    return members


def check_degrees(graph: TannerGraph, subset: Iterable[int]) -> Dict[int, int]:
    """Degree of every check of N(S) inside the induced subgraph G(S)"""
    degrees: Counter = Counter()
    for v in subset:
        degrees.update(graph.var_adj[v])
    return dict(degrees)


def _flags(graph: TannerGraph, members: Tuple[int, ...], degrees: Dict[int, int]) -> ClassFlags:
    is_ets = all(d <= 2 for d in degrees.values())

    is_lets = is_ets
    is_abs = True
    for v in members:
        even = sum(1 for c in graph.var_adj[v] if degrees[c] % 2 == 0)
        odd = len(graph.var_adj[v]) - even
        if even <= odd:
            is_abs = False
        if is_lets and sum(1 for c in graph.var_adj[v] if degrees[c] == 2) < 2:
            is_lets = False

    return ClassFlags(
        is_ets=is_ets,
        is_lets=is_lets,
        is_abs=is_abs,
        is_eabs=is_abs and is_ets,
    )


def subset_profile(graph: TannerGraph, subset: Iterable[int]) -> SubsetProfile:
    """Profile G(S); flags are omitted for the empty subset"""
    members = _normalize_subset(graph, subset)
    degrees = check_degrees(graph, members)
    odd = tuple(sorted(c for c, d in degrees.items() if d % 2 == 1))
    even = tuple(sorted(c for c, d in degrees.items() if d % 2 == 0))
    return SubsetProfile(
        subset=members,
        a=len(members),
        odd_checks=odd,
        even_checks=even,
        check_degrees=degrees,
        flags=_flags(graph, members, degrees) if members else None,
    )


def classify(graph: TannerGraph, subset: Iterable[int]) -> ClassFlags:
    """Category flags of a nonempty variable subset"""
    members = _normalize_subset(graph, subset)
    if not members:
        raise GraphError("classification needs a nonempty subset (a must be positive)")
    return _flags(graph, members, check_degrees(graph, members))


def regularity(graph: TannerGraph) -> RegularityReport:
    var_degrees = {len(a) for a in graph.var_adj}
    chk_degrees = {len(a) for a in graph.chk_adj}
    return RegularityReport(
        is_var_regular=len(var_degrees) == 1,
        d_v=next(iter(var_degrees)) if len(var_degrees) == 1 else None,
        is_chk_regular=len(chk_degrees) == 1,
        d_c=next(iter(chk_degrees)) if len(chk_degrees) == 1 else None,
    )


def to_networkx(graph: TannerGraph) -> nx.Graph:
    """Bipartite networkx view; variable nodes are ('v', i), checks ('c', j)"""
    g = nx.Graph()
    g.add_nodes_from((("v", v) for v in range(graph.n_var)), bipartite=0)
    g.add_nodes_from((("c", c) for c in range(graph.n_chk)), bipartite=1)
    g.add_edges_from((("v", v), ("c", c)) for v, c in graph.edges())
    return g


def components(graph: TannerGraph) -> List[Tuple[int, ...]]:
    """Variable sets of the connected components, smallest index first"""
    result = []
    for part in nx.connected_components(to_networkx(graph)):
        result.append(tuple(sorted(i for kind, i in part if kind == "v")))
    return sorted((c for c in result if c), key=lambda c: c[0])


def is_connected(graph: TannerGraph) -> bool:
    if graph.n_var + graph.n_chk == 0:
        return True
    return nx.is_connected(to_networkx(graph))
