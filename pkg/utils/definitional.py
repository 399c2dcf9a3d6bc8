"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                       Definitional Oracle                                        │
│                                                                                                  │
│  Description: Second, independently coded trapping-set classifier that follows the textbook      │
│               definitions literally on a networkx induced subgraph, plus naive all-subset scans. │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from models.tanner_graph import TannerGraph, TrappingSetKind


def induced_subgraph(graph: TannerGraph, subset: Iterable[int]) -> nx.Graph:
    """G(S): nodes S ∪ N(S), edges between S and N(S)"""
    g = nx.Graph()
    for v in subset:
        g.add_node(("v", v))
        for c in graph.var_adj[v]:
            g.add_edge(("v", v), ("c", c))
    return g


def definitional_class(graph: TannerGraph, subset: Iterable[int]) -> Dict[str, object]:
    """Flags and (a, b) computed straight from the definitions"""
    members = sorted(set(subset))
    g = induced_subgraph(graph, members)
    checks = [n for n in g.nodes if n[0] == "c"]
    odd = {n for n in checks if g.degree(n) % 2 == 1}
    even = {n for n in checks if g.degree(n) % 2 == 0}

    elementary = all(g.degree(n) in (1, 2) for n in checks)

    pruned = g.copy()
    pruned.remove_nodes_from([n for n in checks if g.degree(n) == 1])
    leafless = pruned.number_of_nodes() > 0 and min(d for _, d in pruned.degree) >= 2

    absorbing = all(
        sum(1 for n in g.neighbors(("v", v)) if n in even)
        > sum(1 for n in g.neighbors(("v", v)) if n in odd)
        for v in members
    )

    return {
        "a": len(members),
        "b": len(odd),
        TrappingSetKind.TS: True,
        TrappingSetKind.ETS: elementary,
        TrappingSetKind.LETS: elementary and leafless,
        TrappingSetKind.ABS: absorbing,
        TrappingSetKind.EABS: absorbing and elementary,
    }


def naive_scan(
    graph: TannerGraph, kind: TrappingSetKind, a_max: Optional[int] = None
) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """Every nonempty subset of the kind as (a, b, subset), in (a, b, subset) order"""
    limit = graph.n_var if a_max is None else min(a_max, graph.n_var)
    found = []
    for size in range(1, limit + 1):
        for subset in combinations(range(graph.n_var), size):
            profile = definitional_class(graph, subset)
            if profile[kind]:
                found.append((size, profile["b"], subset))
    return sorted(found)


def naive_min_b(
    graph: TannerGraph, a: int, kind: TrappingSetKind
) -> Optional[Tuple[int, Tuple[int, ...]]]:
    best = None
    for subset in combinations(range(graph.n_var), a):
        profile = definitional_class(graph, subset)
        if profile[kind] and (best is None or profile["b"] < best[0]):
            best = (profile["b"], subset)
    return best


def naive_min_a(
    graph: TannerGraph, b: int, kind: TrappingSetKind
) -> Optional[Tuple[int, Tuple[int, ...]]]:
    for size in range(1, graph.n_var + 1):
        for subset in combinations(range(graph.n_var), size):
            profile = definitional_class(graph, subset)
            if profile[kind] and profile["b"] == b:
                return size, subset
    return None
