"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Test Fixtures                                           │
│                                                                                                  │
│  Description: Shared graphs and formulas for the toolkit tests.                                  │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from typing import Callable, List

import networkx as nx
import pytest

from models.formula import ClassDescriptor, MonotoneFormula
from models.tanner_graph import TannerGraph
from services.reduction_chain import step4_formula_to_tanner
from services.sat_logic import random_instance, repeated_clause_formula
from services.tanner_core import build_graph


def graph_from_networkx(g: nx.Graph, n_var: int, n_chk: int) -> TannerGraph:
    """Nodes 0..n_var-1 are variables, the rest checks"""
    edges = []
    for u, v in g.edges():
        if u > v:
            u, v = v, u
        edges.append((u, v - n_var))
    return build_graph(n_var, n_chk, edges)


def random_tanner_graph(n_var: int, n_chk: int, p: float, seed: int) -> TannerGraph:
    g = nx.bipartite.random_graph(n_var, n_chk, p, seed=seed)
    return graph_from_networkx(g, n_var, n_chk)


@pytest.fixture
def six_cycle() -> TannerGraph:
    """v0-c0-v1-c1-v2-c2-v0"""
    return build_graph(3, 3, [(0, 0), (0, 2), (1, 0), (1, 1), (2, 1), (2, 2)])


@pytest.fixture
def repeated_clause() -> MonotoneFormula:
    """(x x' x'') three times: cubic, 1-IN-3 satisfiable"""
    return repeated_clause_formula()


@pytest.fixture
def k33() -> TannerGraph:
    graph, _, _ = step4_formula_to_tanner(repeated_clause_formula())
    return graph


@pytest.fixture
def random_graphs() -> Callable[[int], List[TannerGraph]]:
    def make(count: int, max_var: int = 8, max_chk: int = 8) -> List[TannerGraph]:
        graphs = []
        for seed in range(count):
            n_var = 2 + seed % (max_var - 1)
            n_chk = 2 + (seed * 3) % (max_chk - 1)
            graphs.append(random_tanner_graph(n_var, n_chk, 0.4, seed))
        return graphs

    return make


@pytest.fixture
def regular_graph() -> Callable[..., TannerGraph]:
    """Variable-regular graph of degree alpha from a random alpha-regular formula"""

    def make(alpha: int, beta: int, n_vars: int, seed: int = 0) -> TannerGraph:
        descriptor = ClassDescriptor(require_beta=beta, require_alpha=alpha)
        graph, _, _ = step4_formula_to_tanner(random_instance(descriptor, n_vars, seed))
        return graph

    return make
