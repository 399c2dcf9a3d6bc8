"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Reduction Chain Tests                                       │
│                                                                                                  │
│  Description: The four-step Min-b chain: sizes, classes, equisatisfiability and witness transport.│
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from itertools import combinations, combinations_with_replacement

import pytest

from models.formula import Assignment, ClassDescriptor, MonotoneFormula
from models.trace import GadgetKind
from services import reduction_chain
from services.sat_logic import (
    brute_force_gamma_in_beta,
    check_gamma_in_beta,
    random_instance,
    validate_class,
)
from services.search_engine import min_b
from services.tanner_core import regularity, subset_profile
from utils.errors import AssignmentError, ReductionError


def _all_formulas_over_three_variables():
    """Every multiset of up to four clauses over {a, b, c} (one possible clause)"""
    for count in range(1, 5):
        yield MonotoneFormula.build(["a", "b", "c"], [[0, 1, 2]] * count)


def test_step1_beta_three_is_the_identity(repeated_clause):
    upsilon, trace = reduction_chain.step1_expand(repeated_clause, 3)
    assert upsilon == repeated_clause
    assert trace.covers(3, 3)


def test_step1_beta_four_adds_one_variable(repeated_clause):
    upsilon, trace = reduction_chain.step1_expand(repeated_clause, 4)
    assert (upsilon.n_vars, upsilon.n_clauses) == (4, 3)
    assert upsilon.variables[-1] == "@xp"
    assert upsilon.beta == 4
    assert trace.covers(upsilon.n_vars, upsilon.n_clauses)


@pytest.mark.parametrize("beta", [5, 6])
def test_step1_wide_clauses_use_forcing_blocks(repeated_clause, beta):
    upsilon, trace = reduction_chain.step1_expand(repeated_clause, beta)
    assert upsilon.n_vars == 3 + (beta - 3) * (2 * beta - 3)
    assert upsilon.n_clauses == 3 + (beta - 3) * (beta - 1)
    assert upsilon.beta == beta
    assert len(trace.gadgets_of(GadgetKind.FORCING_BLOCK)) == beta - 3


def test_step1_rejects_other_widths():
    formula = MonotoneFormula.build(["a", "b", "c", "d"], [[0, 1, 2, 3]])
    with pytest.raises(ReductionError, match="width 3"):
        reduction_chain.step1_expand(formula, 4)


@pytest.mark.parametrize("beta", [3, 4, 5])
def test_step1_equisatisfiable_and_transports_witnesses(beta):
    formulas = list(_all_formulas_over_three_variables())
    three = ClassDescriptor(require_beta=3)
    formulas += [random_instance(three, 4, seed, n_clauses=3) for seed in range(6)]
    for phi in formulas:
        upsilon, trace = reduction_chain.step1_expand(phi, beta)
        source = brute_force_gamma_in_beta(phi, 1)
        target = brute_force_gamma_in_beta(upsilon, 2)
        assert (source is None) == (target is None)
        if source is not None:
            forward = reduction_chain.step1_forward(trace, source)
            assert check_gamma_in_beta(upsilon, forward, 2)
            back = reduction_chain.step1_backward(trace, target)
            assert check_gamma_in_beta(phi, back, 1)


def _all_formulas_over_four_variables():
    """Every multiset of one to four clauses drawn from the four triples over {a, b, c, d}"""
    triples = list(combinations(range(4), 3))
    for count in range(1, 5):
        for clauses in combinations_with_replacement(triples, count):
            yield MonotoneFormula.build(["a", "b", "c", "d"], clauses)


@pytest.mark.parametrize("beta", [3, 4, 5])
def test_step1_holds_on_every_small_formula(beta):
    formulas = list(_all_formulas_over_four_variables())
    assert len(formulas) == 69
    satisfiable = 0
    for phi in formulas:
        upsilon, trace = reduction_chain.step1_expand(phi, beta)
        source = brute_force_gamma_in_beta(phi, 1)
        target = brute_force_gamma_in_beta(upsilon, 2)
        assert (source is None) == (target is None), phi.clauses
        if source is None:
            continue
        satisfiable += 1
        assert check_gamma_in_beta(upsilon, reduction_chain.step1_forward(trace, source), 2)
        assert check_gamma_in_beta(phi, reduction_chain.step1_backward(trace, target), 1)
    # both outcomes occur, e.g. {abc} alone versus all four triples
    assert 0 < satisfiable < len(formulas)


def test_step1_backward_for_beta_four_reads_the_extra_variable(repeated_clause):
    upsilon, trace = reduction_chain.step1_expand(repeated_clause, 4)
    first = brute_force_gamma_in_beta(upsilon, 2)
    assert first.render() == "FFTT"
    # @xp true: the first three values already form a 1-IN-3 assignment
    assert reduction_chain.step1_backward(trace, first).render() == "FFT"
    # @xp false: two of the three are true, so the complement is taken
    flipped = Assignment(values=(False, True, True, False))
    assert reduction_chain.step1_backward(trace, flipped).render() == "TFF"


def test_transport_rejects_wrong_lengths(repeated_clause):
    _, trace = reduction_chain.step1_expand(repeated_clause, 4)
    with pytest.raises(AssignmentError):
        reduction_chain.step1_forward(trace, Assignment(values=(True,)))
    with pytest.raises(AssignmentError):
        reduction_chain.step1_backward(trace, Assignment(values=(True, False, False)))


def test_step2_makes_the_formula_cubic():
    upsilon = MonotoneFormula.build(["x", "y", "z"], [[0, 1, 2]])
    psi, trace = reduction_chain.step2_make_cubic(upsilon)
    assert validate_class(psi, ClassDescriptor(require_beta=3, require_cubic=True)) == []
    assert trace.params["h"] == {"x": 3, "y": 3, "z": 3}
    # three equalizers with t = 3 and k = 3, plus nine copies of the clause
    assert psi.n_vars == 3 * 21
    assert psi.n_clauses == 3 * 18 + 9
    assert trace.covers(psi.n_vars, psi.n_clauses)


def test_step2_transport_round_trip():
    upsilon = MonotoneFormula.build(["x", "y", "z"], [[0, 1, 2]])
    psi, trace = reduction_chain.step2_make_cubic(upsilon)
    source = brute_force_gamma_in_beta(upsilon, 2)
    forward = reduction_chain.step2_forward(trace, source)
    assert check_gamma_in_beta(psi, forward, 2)
    assert reduction_chain.step2_backward(trace, forward) == source


def test_step2_rejects_unused_variables():
    upsilon = MonotoneFormula.build(["x", "y", "z", "w"], [[0, 1, 2]])
    with pytest.raises(ReductionError, match="unused"):
        reduction_chain.step2_make_cubic(upsilon)


def test_step3_identity_for_alpha_three(repeated_clause):
    phi, trace = reduction_chain.step3_make_alpha_regular(repeated_clause, 3)
    assert phi == repeated_clause
    assert trace.params["alpha"] == 3


def test_step3_alpha_four():
    psi = random_instance(ClassDescriptor(require_beta=4, require_cubic=True), 4, 0)
    phi, trace = reduction_chain.step3_make_alpha_regular(psi, 4)
    assert validate_class(phi, ClassDescriptor(require_beta=4, require_alpha=4)) == []
    assert phi.n_vars == 4 * 4 + 1 * 3 * 4
    assert phi.n_clauses == 4 * psi.n_clauses + 4 * 1 * 4
    source = brute_force_gamma_in_beta(psi, 2)
    if source is not None:
        forward = reduction_chain.step3_forward(trace, source)
        assert check_gamma_in_beta(phi, forward, 2)
        assert reduction_chain.step3_backward(trace, forward) == source


def test_step3_strictness(repeated_clause):
    with pytest.raises(ReductionError, match="alpha <= beta"):
        reduction_chain.step3_make_alpha_regular(repeated_clause, 4)
    phi, _ = reduction_chain.step3_make_alpha_regular(repeated_clause, 4, strict=False)
    assert phi.alpha == 4


def test_step3_lifted_bound_example():
    # alpha = 4 over a cubic 3-uniform formula: 24 clauses and 18 variables
    psi = random_instance(ClassDescriptor(require_beta=3, require_cubic=True), 3, 0)
    phi, _ = reduction_chain.step3_make_alpha_regular(psi, 4, strict=False)
    assert (phi.n_clauses, phi.n_vars) == (24, 18)


def test_step3_needs_cubic_input():
    formula = MonotoneFormula.build(["a", "b", "c"], [[0, 1, 2]])
    with pytest.raises(ReductionError, match="cubic"):
        reduction_chain.step3_make_alpha_regular(formula, 3)


def test_step4_incidence_graph(repeated_clause):
    graph, a, trace = reduction_chain.step4_formula_to_tanner(repeated_clause)
    assert (graph.n_var, graph.n_chk, a) == (3, 3, 2)
    assert graph.var_labels == ("x", "x'", "x''")
    assert regularity(graph).d_v == 3
    assert trace.covers(3, 3)


def test_step4_forward_is_a_perfect_lets(repeated_clause):
    graph, a, _ = reduction_chain.step4_formula_to_tanner(repeated_clause)
    witness = reduction_chain.step4_forward(brute_force_gamma_in_beta(repeated_clause, 2))
    profile = subset_profile(graph, witness)
    assert (profile.a, profile.b) == (a, 0)
    assert profile.flags.is_lets and profile.flags.is_eabs


def test_step4_needs_regular_input():
    formula = MonotoneFormula.build(["a", "b", "c", "d"], [[0, 1, 2], [0, 1, 3]])
    with pytest.raises(ReductionError):
        reduction_chain.step4_formula_to_tanner(formula)


@pytest.mark.parametrize("alpha,beta", [(3, 3), (3, 4), (4, 4)])
def test_step4_min_b_zero_iff_satisfiable(alpha, beta):
    descriptor = ClassDescriptor(require_beta=beta, require_alpha=alpha)
    n_vars = 6 if beta == 3 or alpha == beta else 8
    for seed in range(5):
        phi = random_instance(descriptor, n_vars, seed)
        graph, a, trace = reduction_chain.step4_formula_to_tanner(phi)
        satisfiable = brute_force_gamma_in_beta(phi, 2) is not None
        for kind in ("LETS", "EABS"):
            result = min_b(graph, a, kind)
            assert (result.found and result.b == 0) == satisfiable
            if result.found and result.b == 0:
                back = reduction_chain.step4_backward(trace, result.witness)
                assert check_gamma_in_beta(phi, back, 2)


def test_full_chain_on_repeated_clause(repeated_clause):
    graph, a, trace = reduction_chain.full_min_b_chain(repeated_clause, 3, 3)
    report = regularity(graph)
    assert (report.d_v, report.d_c) == (3, 3)
    assert len(trace.parts) == 4
    assert trace.covers(graph.n_var, graph.n_chk)
    assert a == 2 * graph.n_chk // 3

    source = brute_force_gamma_in_beta(repeated_clause, 1)
    witness = reduction_chain.chain_forward(trace, source)
    profile = subset_profile(graph, witness)
    assert (profile.a, profile.b) == (a, 0)
    assert profile.flags.is_lets
    back = reduction_chain.chain_backward(trace, witness)
    assert check_gamma_in_beta(repeated_clause, back, 1)


def test_full_chain_provenance_reaches_source_names(repeated_clause):
    _, _, trace = reduction_chain.full_min_b_chain(repeated_clause, 3, 4)
    sources = {p.source for p in trace.variables}
    # every variable lives in the equalizer of one widened-formula variable
    assert sources == {"x", "x'", "x''", "@xp"}


def test_full_chain_bounds(repeated_clause):
    with pytest.raises(ReductionError):
        reduction_chain.full_min_b_chain(repeated_clause, 4, 3)
