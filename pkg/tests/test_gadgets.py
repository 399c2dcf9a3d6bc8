"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                           Gadget Tests                                           │
│                                                                                                  │
│  Description: Equalizer, forcing and occurrence blocks: shapes and their forcing properties.     │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import pytest

from models.formula import Assignment
from models.trace import Provenance
from services.gadgets import (
    FormulaBuilder,
    build_equalizer_formula,
    build_forcing_block,
    build_occurrence_block,
    equalizer_values,
    forcing_values,
    fresh_name,
    occurrence_values,
)
from services.sat_logic import check_gamma_in_beta, iter_gamma_in_beta, scan_gamma_in_beta
from utils.errors import ReductionError


def _assignment(n_vars, values):
    return Assignment.from_true_set(n_vars, (v for v, value in values.items() if value))


def test_fresh_names_are_reserved():
    assert fresh_name("z", 1, 2) == "@z.1.2"
    assert fresh_name("xp") == "@xp"


def test_builder_rejects_name_collisions():
    builder = FormulaBuilder()
    builder.variable("@xp", Provenance(origin="gadget", role="x_prime"))
    with pytest.raises(ReductionError, match="collision"):
        builder.variable("@xp", Provenance(origin="gadget", role="x_prime"))


@pytest.mark.parametrize("t,k", [(1, 3), (2, 3), (3, 3), (2, 4), (1, 5)])
def test_equalizer_shape(t, k):
    omega, gadget = build_equalizer_formula(t, k)
    assert omega.n_vars == 3 * t + 2 * t * (k - 1)
    assert omega.n_clauses == 6 * t
    assert omega.beta == k
    counts = omega.occurrences()
    assert all(counts[b] == 2 for b in gadget.variable_roles["black"])
    assert all(counts[g] == 3 for g in gadget.variable_roles["grey"])
    assert all(counts[w] == 3 for w in gadget.variable_roles["white"])
    assert gadget.variable_roles["black"] == tuple(range(3 * t))


@pytest.mark.parametrize("t,k", [(1, 3), (2, 3), (3, 3), (1, 4), (2, 4)])
def test_equalizer_forces_equal_blacks(t, k):
    omega, gadget = build_equalizer_formula(t, k)
    blacks = gadget.variable_roles["black"]
    polarities = set()
    for solution in iter_gamma_in_beta(omega, 2):
        values = {solution[b] for b in blacks}
        assert len(values) == 1
        polarities |= values
    assert polarities == {False, True}


@pytest.mark.parametrize("polarity", [False, True])
def test_equalizer_values_satisfy(polarity):
    omega, gadget = build_equalizer_formula(2, 4)
    values = equalizer_values(gadget, polarity)
    assert check_gamma_in_beta(omega, _assignment(omega.n_vars, values), 2)


@pytest.mark.slow
def test_equalizer_exhaustive_scan():
    omega, gadget = build_equalizer_formula(3, 3)
    assert omega.n_vars == 21
    blacks = gadget.variable_roles["black"]
    polarities = set()
    for solution in scan_gamma_in_beta(omega, 2, max_vars=21):
        values = {solution[b] for b in blacks}
        assert len(values) == 1
        polarities |= values
    assert polarities == {False, True}


def test_equalizer_parameters():
    with pytest.raises(ReductionError):
        build_equalizer_formula(0, 3)
    with pytest.raises(ReductionError):
        build_equalizer_formula(1, 2)


@pytest.mark.parametrize("beta", [5, 6, 7])
def test_forcing_block_has_one_solution(beta):
    block, gadget = build_forcing_block(beta)
    assert block.n_vars == 2 * beta - 3
    assert block.n_clauses == beta - 1
    assert block.beta == beta
    expected = _assignment(block.n_vars, forcing_values(gadget))
    assert [s.render() for s in iter_gamma_in_beta(block, 2)] == [expected.render()]


def test_forcing_block_needs_wide_clauses():
    with pytest.raises(ReductionError):
        build_forcing_block(4)


@pytest.mark.parametrize("alpha,beta", [(4, 4), (5, 5), (4, 5), (6, 4)])
def test_occurrence_block_equalizes_copies(alpha, beta):
    block, gadget = build_occurrence_block(alpha, beta)
    copies = gadget.variable_roles["x"]
    assert copies == tuple(range(alpha))
    assert block.n_clauses == alpha * (alpha - 3)
    polarities = set()
    for solution in iter_gamma_in_beta(block, 2):
        values = {solution[x] for x in copies}
        assert len(values) == 1
        polarities |= values
    assert polarities == {False, True}
    for value in (False, True):
        fill = _assignment(block.n_vars, occurrence_values(gadget, value))
        assert check_gamma_in_beta(block, fill, 2)


def test_occurrence_block_for_cubic_target_is_empty():
    block, gadget = build_occurrence_block(3, 4)
    assert block.n_clauses == 0
    assert gadget.variable_roles["y"] == ()
