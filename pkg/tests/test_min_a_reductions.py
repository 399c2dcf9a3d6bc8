"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Min-a Reduction Tests                                       │
│                                                                                                  │
│  Description: Clause-gadget graphs for the LETS and EABS Min-a problems.                         │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import pytest

from models.formula import Assignment, ClassDescriptor, MonotoneFormula
from models.search import SearchStatus
from models.tanner_graph import TrappingSetKind
from services.min_a_reductions import (
    build_min_a_eabs_instance,
    build_min_a_lets_instance,
    gadget_property_violations,
    min_a_backward,
    min_a_forward,
)
from services.sat_logic import brute_force_gamma_in_beta, random_instance
from services.search_engine import min_a
from services.tanner_core import regularity, subset_profile
from utils.errors import AssignmentError, ReductionError


def test_lets_instance_sizes(repeated_clause):
    instance = build_min_a_lets_instance(repeated_clause)
    assert (instance.graph.n_var, instance.graph.n_chk) == (15, 27)
    assert (instance.b, instance.a_expected, instance.eta) == (21, 5, 3)
    assert instance.kind == TrappingSetKind.LETS
    assert instance.trace.covers(15, 27)


def test_eabs_instance_sizes(repeated_clause):
    instance = build_min_a_eabs_instance(repeated_clause)
    assert (instance.graph.n_var, instance.graph.n_chk) == (21, 48)
    assert (instance.b, instance.a_expected) == (21, 8)


def test_lets_forward_witness(repeated_clause):
    instance = build_min_a_lets_instance(repeated_clause)
    solution = brute_force_gamma_in_beta(repeated_clause, 1)
    subset = min_a_forward(instance, solution)
    assert subset == (0, 3, 6, 13, 14)
    profile = subset_profile(instance.graph, subset)
    assert (profile.a, profile.b) == (5, 21)
    assert profile.flags.is_lets
    assert gadget_property_violations(instance, subset) == []
    assert min_a_backward(instance, subset) == solution


def test_eabs_forward_witness(repeated_clause):
    instance = build_min_a_eabs_instance(repeated_clause)
    solution = brute_force_gamma_in_beta(repeated_clause, 1)
    subset = min_a_forward(instance, solution)
    assert subset == (0, 1, 5, 6, 10, 11, 19, 20)
    profile = subset_profile(instance.graph, subset)
    assert (profile.a, profile.b) == (8, 21)
    assert profile.flags.is_eabs
    assert gadget_property_violations(instance, subset) == []
    assert min_a_backward(instance, subset) == solution


def test_min_a_finds_the_forced_size(repeated_clause):
    instance = build_min_a_lets_instance(repeated_clause)
    result = min_a(instance.graph, instance.b, TrappingSetKind.LETS)
    assert result.status == SearchStatus.FOUND
    assert result.a == 5
    assert gadget_property_violations(instance, result.witness) == []
    back = min_a_backward(instance, result.witness)
    assert sum(back.values) == 1


@pytest.mark.slow
def test_min_a_eabs_finds_the_forced_size(repeated_clause):
    instance = build_min_a_eabs_instance(repeated_clause)
    result = min_a(instance.graph, instance.b, TrappingSetKind.EABS)
    assert (result.status, result.a) == (SearchStatus.FOUND, 8)
    assert gadget_property_violations(instance, result.witness) == []


def test_property_violations_flag_a_wrong_gadget_node(repeated_clause):
    instance = build_min_a_lets_instance(repeated_clause)
    violations = gadget_property_violations(instance, (1,))
    assert any("g1" in v for v in violations)


def test_eta_not_divisible_by_three_has_no_target_size():
    phi = random_instance(ClassDescriptor(require_beta=3, require_cubic=True), 4, 0)
    instance = build_min_a_lets_instance(phi)
    assert instance.a_expected is None
    assert instance.b == 4 * 9


def test_checks_have_the_gadget_degrees(repeated_clause):
    graph = build_min_a_lets_instance(repeated_clause).graph
    assert not regularity(graph).is_regular
    assert {len(graph.chk_adj[c]) for c in range(graph.n_chk)} == {3, 5}


def test_input_must_be_cubic():
    phi = MonotoneFormula.build(["a", "b", "c"], [[0, 1, 2]])
    with pytest.raises(ReductionError, match="cubic"):
        build_min_a_lets_instance(phi)


def test_forward_needs_one_value_per_variable(repeated_clause):
    instance = build_min_a_lets_instance(repeated_clause)
    with pytest.raises(AssignmentError):
        min_a_forward(instance, Assignment(values=(True,)))
