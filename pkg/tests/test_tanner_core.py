"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                        Tanner Core Tests                                         │
│                                                                                                  │
│  Description: Graph construction, subset profiles, classification and the taxonomy identities.   │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from itertools import combinations

import pytest

from models.tanner_graph import TrappingSetKind
from services.tanner_core import (
    build_graph,
    check_degrees,
    classify,
    components,
    is_connected,
    regularity,
    subset_profile,
)
from utils.definitional import definitional_class
from utils.errors import GraphError

KINDS = list(TrappingSetKind)


def test_build_graph_rejects_duplicate_edges():
    with pytest.raises(GraphError, match="duplicate edge"):
        build_graph(2, 2, [(0, 0), (0, 0)])


def test_build_graph_rejects_out_of_range_nodes():
    with pytest.raises(GraphError):
        build_graph(2, 2, [(2, 0)])
    with pytest.raises(GraphError):
        build_graph(2, 2, [(0, 5)])


def test_adjacency_is_sorted_and_mirrored(six_cycle):
    assert six_cycle.var_adj == ((0, 2), (0, 1), (1, 2))
    assert six_cycle.chk_adj == ((0, 1), (1, 2), (0, 2))
    assert six_cycle.n_edges == 6


def test_full_cycle_is_a_codeword_like_set(six_cycle):
    profile = subset_profile(six_cycle, [2, 0, 1, 1])
    assert profile.subset == (0, 1, 2)
    assert profile.class_label == "(3,0)"
    assert profile.odd_checks == ()
    assert profile.flags.is_lets and profile.flags.is_eabs


def test_single_variable(six_cycle):
    profile = subset_profile(six_cycle, [0])
    assert (profile.a, profile.b) == (1, 2)
    assert profile.flags.is_ts
    assert profile.flags.is_ets
    assert not profile.flags.is_lets
    assert not profile.flags.is_abs


def test_path_of_two_variables(six_cycle):
    profile = subset_profile(six_cycle, [0, 1])
    assert profile.b == 2
    assert profile.even_checks == (0,)
    flags = profile.flags
    assert flags.is_ets
    assert not flags.is_lets
    # one even and one odd neighbor: a tie is not absorbing
    assert not flags.is_abs


def test_degree_three_check_is_not_elementary(k33):
    profile = subset_profile(k33, [0, 1, 2])
    assert profile.b == 3
    assert not profile.flags.is_ets
    assert not profile.flags.is_eabs
    assert not profile.flags.is_abs


def test_empty_subset_has_no_flags(six_cycle):
    profile = subset_profile(six_cycle, [])
    assert profile.a == 0 and profile.b == 0
    assert profile.flags is None
    with pytest.raises(GraphError):
        classify(six_cycle, [])


def test_check_degrees_only_covers_the_neighborhood(six_cycle):
    assert check_degrees(six_cycle, [0]) == {0: 1, 2: 1}


def test_regularity(six_cycle):
    report = regularity(six_cycle)
    assert report.is_regular and (report.d_v, report.d_c) == (2, 2)
    irregular = build_graph(2, 2, [(0, 0), (0, 1), (1, 0)])
    assert not regularity(irregular).is_var_regular


def test_components():
    graph = build_graph(4, 2, [(0, 0), (1, 0), (2, 1), (3, 1)])
    assert components(graph) == [(0, 1), (2, 3)]
    assert not is_connected(graph)


def test_classify_matches_the_definitions(random_graphs):
    for graph in random_graphs(40):
        for size in range(1, graph.n_var + 1):
            for subset in combinations(range(graph.n_var), size):
                flags = classify(graph, subset)
                expected = definitional_class(graph, subset)
                profile = subset_profile(graph, subset)
                assert profile.b == expected["b"]
                for kind in KINDS:
                    assert flags.has(kind) == expected[kind], (subset, kind)


@pytest.mark.slow
def test_classify_matches_the_definitions_on_larger_graphs(random_graphs):
    for graph in random_graphs(200, max_var=12, max_chk=12):
        for size in range(1, graph.n_var + 1):
            for subset in combinations(range(graph.n_var), size):
                expected = definitional_class(graph, subset)
                flags = classify(graph, subset)
                assert all(flags.has(kind) == expected[kind] for kind in KINDS)


@pytest.mark.parametrize("beta,n_vars", [(3, 6), (4, 8), (3, 9)])
def test_lets_equals_eabs_when_variables_have_degree_three(regular_graph, beta, n_vars):
    for seed in range(5):
        graph = regular_graph(3, beta, n_vars, seed)
        for size in range(1, graph.n_var + 1):
            for subset in combinations(range(graph.n_var), size):
                flags = classify(graph, subset)
                assert flags.is_lets == flags.is_eabs


def test_every_eabs_is_a_lets_when_variables_have_degree_four(regular_graph):
    for seed in range(5):
        graph = regular_graph(4, 4, 6, seed)
        for size in range(1, graph.n_var + 1):
            for subset in combinations(range(graph.n_var), size):
                flags = classify(graph, subset)
                if flags.is_eabs:
                    assert flags.is_lets
