"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Verification Pipelines                                      │
│                                                                                                  │
│  Description: Each pipeline runs one reduction, sweeps its gadget properties, moves              │
│               witnesses both ways and compares exact search with the SAT oracles.                │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
import time
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from config.settings import get_settings
from models.formula import Assignment, ClassDescriptor, MonotoneFormula
from models.report import (
    CheckStatus,
    InstanceDescriptor,
    RuntimeStats,
    SuiteReport,
    VerificationCheck,
    VerificationReport,
)
from models.search import SearchBudget, SearchResult, SearchStatus
from models.tanner_graph import TrappingSetKind
from services import min_a_reductions, reduction_chain, search_engine
from services.gadgets import (
    build_equalizer_formula,
    build_forcing_block,
    build_occurrence_block,
    forcing_values,
)
from services.sat_logic import (
    brute_force_gamma_in_beta,
    check_gamma_in_beta,
    complement,
    iter_gamma_in_beta,
    random_instance,
    repeated_clause_formula,
    scan_gamma_in_beta,
    validate_class,
)
from services.tanner_core import regularity, subset_profile
from utils.formula_io import formula_digest

logger = logging.getLogger(__name__)

PIPELINES = ("1", "2", "3", "4", "thm2", "thm4")


class VerificationCaps(BaseModel):
    """Size limits for the brute-force legs; legs above a limit are skipped"""

    model_config = ConfigDict(frozen=True)

    oracle_max_vars: int = Field(default_factory=lambda: get_settings().oracle_max_vars, ge=1)
    scan_max_vars: int = Field(default_factory=lambda: get_settings().scan_max_vars, ge=1)
    enumerate_max_vars: int = Field(default=21, ge=0)
    equalizer_t_max: int = Field(default=3, ge=1)
    equalizer_k_max: int = Field(default=4, ge=3)
    occurrence_pairs: Tuple[Tuple[int, int], ...] = ((4, 4), (5, 5), (4, 5))
    budget: SearchBudget = Field(
        default_factory=lambda: SearchBudget(
            max_nodes=get_settings().max_nodes, max_seconds=get_settings().max_seconds
        )
    )
    threads: int = Field(default_factory=lambda: get_settings().threads, ge=1)


class _Recorder:
    """Collects checks for one pipeline run"""

    def __init__(self, pipeline: str, caps: VerificationCaps):
        self.pipeline = pipeline
        self.caps = caps
        self.checks: List[VerificationCheck] = []
        self.nodes = 0
        self.oracle_calls = 0
        self.started = time.perf_counter()

    def compare(self, name: str, observed: Any, expected: Any, provenance: str) -> bool:
        ok = observed == expected
        self._add(name, CheckStatus.PASS if ok else CheckStatus.FAIL, observed, expected, provenance)
        return ok

    def skip(self, name: str, reason: str, provenance: str) -> None:
        self._add(name, CheckStatus.SKIP, None, None, provenance, reason)

    def _add(self, name, status, observed, expected, provenance, reason=None) -> None:
        check = VerificationCheck(
            name=name,
            status=status,
            observed=observed,
            expected=expected,
            provenance=provenance,
            reason=reason,
        )
        if status == CheckStatus.FAIL:
            logger.error(
                f"[{self.pipeline}] {name} failed: observed {observed!r}, expected {expected!r}"
            )
        else:
            logger.debug(f"[{self.pipeline}] {name}: {status.value}")
        self.checks.append(check)

    def oracle(
        self, formula: MonotoneFormula, gamma: int, name: str
    ) -> Tuple[bool, Optional[Assignment]]:
        """(decided, witness); skips the named leg when the formula is over the cap"""
        if formula.n_vars > self.caps.oracle_max_vars:
            self.skip(
                name,
                f"{formula.n_vars} variables exceed the oracle cap of {self.caps.oracle_max_vars}",
                "oracle",
            )
            return False, None
        self.oracle_calls += 1
        return True, brute_force_gamma_in_beta(formula, gamma, max_vars=self.caps.oracle_max_vars)

    def search(self, name: str, run: Callable[[], SearchResult]) -> Optional[SearchResult]:
        result = run()
        self.nodes += result.nodes_expanded
        if result.status == SearchStatus.BUDGET_EXCEEDED:
            self.skip(name, f"search budget exceeded after {result.nodes_expanded} nodes", "search")
            return None
        return result

    def report(self, instance: InstanceDescriptor) -> VerificationReport:
        report = VerificationReport(
            pipeline=self.pipeline,
            instance=instance,
            checks=tuple(self.checks),
            stats=RuntimeStats(
                elapsed_seconds=time.perf_counter() - self.started,
                nodes_expanded=self.nodes,
                oracle_calls=self.oracle_calls,
            ),
        )
        logger.info(
            f"Pipeline {self.pipeline}: {'pass' if report.passed else 'FAIL'} "
            f"({len(report.checks)} checks, {len(report.skipped())} skipped)"
        )
        return report


def describe(
    formula: MonotoneFormula, source: str, seed: Optional[int] = None, **params
) -> InstanceDescriptor:
    return InstanceDescriptor(
        source=source,
        seed=seed,
        params={"n_vars": formula.n_vars, "n_clauses": formula.n_clauses, **params},
        digest=formula_digest(formula),
    )


def _violations(formula: MonotoneFormula, descriptor: ClassDescriptor) -> List[Dict[str, Any]]:
    return [v.model_dump(mode="json") for v in validate_class(formula, descriptor)]


def _render(assignment: Optional[Assignment]) -> Optional[str]:
    return assignment.render() if assignment is not None else None


def _cross_check_oracles(rec: _Recorder, formula: MonotoneFormula, gamma: int) -> None:
    if formula.n_vars > rec.caps.scan_max_vars:
        rec.skip("oracle.cross_check", f"{formula.n_vars} variables exceed the scan cap", "oracle")
        return
    scanned = next(scan_gamma_in_beta(formula, gamma, max_vars=rec.caps.scan_max_vars), None)
    first = brute_force_gamma_in_beta(formula, gamma, max_vars=max(formula.n_vars, 1))
    rec.compare("oracle.cross_check", _render(first), _render(scanned), "oracle")


# Gadget sweeps


def sweep_equalizer(rec: _Recorder, t: int, k: int) -> None:
    """Every 2-IN-k assignment gives all blacks one value, and both values occur"""
    omega, gadget = build_equalizer_formula(t, k)
    blacks = gadget.variable_roles["black"]
    polarities = set()
    uniform = True
    for solution in iter_gamma_in_beta(omega, 2):
        values = {solution[b] for b in blacks}
        uniform = uniform and len(values) == 1
        polarities |= values
    rec.compare(
        f"equalizer[t={t},k={k}].blacks_equal_and_both_polarities",
        {"blacks_always_equal": uniform, "polarities": sorted(polarities)},
        {"blacks_always_equal": True, "polarities": [False, True]},
        "gadget sweep",
    )


def sweep_forcing_block(rec: _Recorder, beta: int) -> None:
    block, gadget = build_forcing_block(beta)
    solutions = [s.render() for s in iter_gamma_in_beta(block, 2)]
    expected = Assignment.from_true_set(
        block.n_vars, (v for v, value in forcing_values(gadget).items() if value)
    ).render()
    rec.compare(f"forcing_block[beta={beta}].unique_solution", solutions, [expected], "gadget sweep")


def sweep_occurrence_block(rec: _Recorder, alpha: int, beta: int) -> None:
    block, gadget = build_occurrence_block(alpha, beta)
    copies = gadget.variable_roles["x"]
    uniform = True
    polarities = set()
    for solution in iter_gamma_in_beta(block, 2):
        values = {solution[x] for x in copies}
        uniform = uniform and len(values) == 1
        polarities |= values
    rec.compare(
        f"occurrence_block[alpha={alpha},beta={beta}].copies_equal",
        {"copies_always_equal": uniform, "polarities": sorted(polarities)},
        {"copies_always_equal": True, "polarities": [False, True]},
        "gadget sweep",
    )


# Step pipelines


def verify_step1(
    phi: MonotoneFormula, beta: int, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    rec = _Recorder("step1", caps)
    upsilon, trace = reduction_chain.step1_expand(phi, beta)

    violations = _violations(upsilon, ClassDescriptor(require_beta=beta))
    rec.compare("output.class", violations, [], "construction")
    if beta == 3:
        expected = (phi.n_vars, phi.n_clauses)
    elif beta == 4:
        expected = (phi.n_vars + 1, phi.n_clauses)
    else:
        expected = (phi.n_vars + (beta - 3) * (2 * beta - 3), phi.n_clauses + (beta - 3) * (beta - 1))
    rec.compare("output.counts", (upsilon.n_vars, upsilon.n_clauses), expected, "construction")
    rec.compare("trace.total", trace.covers(upsilon.n_vars, upsilon.n_clauses), True, "construction")
    if beta >= 5:
        sweep_forcing_block(rec, beta)

    decided_in, sat_in = rec.oracle(phi, 1, "oracle.input")
    decided_out, sat_out = rec.oracle(upsilon, 2, "oracle.output")
    if decided_in:
        _cross_check_oracles(rec, phi, 1)
    if decided_in and decided_out:
        rec.compare("equisatisfiable", sat_out is not None, sat_in is not None, "oracle")
    if sat_in is not None:
        two_in_three = check_gamma_in_beta(phi, complement(sat_in), 2)
        rec.compare("complement.two_in_three", two_in_three, True, "oracle")
        forward = reduction_chain.step1_forward(trace, sat_in)
        rec.compare("witness.forward", check_gamma_in_beta(upsilon, forward, 2), True, "transport")
        back = reduction_chain.step1_backward(trace, forward)
        rec.compare("witness.round_trip", check_gamma_in_beta(phi, back, 1), True, "transport")
    if sat_out is not None:
        back = reduction_chain.step1_backward(trace, sat_out)
        rec.compare("witness.backward", check_gamma_in_beta(phi, back, 1), True, "transport")
    return rec.report(instance)


def verify_step2(
    upsilon: MonotoneFormula, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    rec = _Recorder("step2", caps)
    psi, trace = reduction_chain.step2_make_cubic(upsilon)
    beta = upsilon.beta

    rec.compare(
        "output.class",
        _violations(psi, ClassDescriptor(require_beta=beta, require_cubic=True)),
        [],
        "construction",
    )
    occurrences = upsilon.occurrences()
    rec.compare(
        "h_values",
        trace.params["h"],
        {name: 3 * occurrences[j] for j, name in enumerate(upsilon.variables)},
        "construction",
    )
    ts = [3 * count for count in occurrences]
    expected = (
        sum(3 * t + 2 * t * (beta - 1) for t in ts),
        sum(6 * t for t in ts) + reduction_chain.CLAUSE_COPIES * upsilon.n_clauses,
    )
    rec.compare("output.counts", (psi.n_vars, psi.n_clauses), expected, "construction")
    rec.compare("trace.total", trace.covers(psi.n_vars, psi.n_clauses), True, "construction")
    for t in range(1, caps.equalizer_t_max + 1):
        for k in range(3, caps.equalizer_k_max + 1):
            sweep_equalizer(rec, t, k)

    decided_in, sat_in = rec.oracle(upsilon, 2, "oracle.input")
    decided_out, sat_out = rec.oracle(psi, 2, "oracle.output")
    if decided_in and decided_out:
        rec.compare("equisatisfiable", sat_out is not None, sat_in is not None, "oracle")
    if sat_in is not None:
        forward = reduction_chain.step2_forward(trace, sat_in)
        rec.compare("witness.forward", check_gamma_in_beta(psi, forward, 2), True, "transport")
        back = reduction_chain.step2_backward(trace, forward)
        rec.compare("witness.round_trip", back.render(), sat_in.render(), "transport")
    if sat_out is not None:
        back = reduction_chain.step2_backward(trace, sat_out)
        rec.compare("witness.backward", check_gamma_in_beta(upsilon, back, 2), True, "transport")
    return rec.report(instance)


def verify_step3(
    psi: MonotoneFormula, alpha: int, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    rec = _Recorder("step3", caps)
    phi, trace = reduction_chain.step3_make_alpha_regular(psi, alpha)
    beta = psi.beta
    gamma = psi.n_vars

    rec.compare(
        "output.class",
        _violations(phi, ClassDescriptor(require_beta=beta, require_alpha=alpha)),
        [],
        "construction",
    )
    block_clauses = sum(1 for p in trace.constraints if p.role == "occurrence_clause")
    rec.compare("occurrence_clauses", block_clauses, alpha * (alpha - 3) * gamma, "construction")
    if alpha == 3:
        # already 3-regular: the step is the identity
        expected = (psi.n_vars, psi.n_clauses)
    else:
        expected = (
            alpha * gamma + (alpha - 3) * (beta - 1) * gamma,
            alpha * psi.n_clauses + alpha * (alpha - 3) * gamma,
        )
    rec.compare("output.counts", (phi.n_vars, phi.n_clauses), expected, "construction")
    pairs = list(caps.occurrence_pairs)
    block_vars = (alpha - 3) * (beta - 1) + alpha
    if alpha > 3 and (alpha, beta) not in pairs and block_vars <= caps.oracle_max_vars:
        pairs.append((alpha, beta))
    for a, b in pairs:
        sweep_occurrence_block(rec, a, b)

    decided_in, sat_in = rec.oracle(psi, 2, "oracle.input")
    decided_out, sat_out = rec.oracle(phi, 2, "oracle.output")
    if decided_in and decided_out:
        rec.compare("equisatisfiable", sat_out is not None, sat_in is not None, "oracle")
    if sat_in is not None:
        forward = reduction_chain.step3_forward(trace, sat_in)
        rec.compare("witness.forward", check_gamma_in_beta(phi, forward, 2), True, "transport")
        back = reduction_chain.step3_backward(trace, forward)
        rec.compare("witness.round_trip", back.render(), sat_in.render(), "transport")
    if sat_out is not None:
        back = reduction_chain.step3_backward(trace, sat_out)
        rec.compare("witness.backward", check_gamma_in_beta(psi, back, 2), True, "transport")
    return rec.report(instance)


def verify_step4(
    phi: MonotoneFormula, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    rec = _Recorder("step4", caps)
    graph, a, trace = reduction_chain.step4_formula_to_tanner(phi)
    alpha, beta = phi.alpha, phi.beta

    report = regularity(graph)
    rec.compare("graph.regularity", (report.d_v, report.d_c), (alpha, beta), "construction")
    rec.compare("graph.size", (graph.n_var, graph.n_chk), (phi.n_vars, phi.n_clauses), "construction")
    rec.compare("edge_count", graph.n_edges, phi.n_clauses * beta, "construction")
    rec.compare("lets_edge_identity", a * alpha, 2 * graph.n_chk, "construction")

    decided, sat = rec.oracle(phi, 2, "oracle.formula")
    for kind in (TrappingSetKind.LETS, TrappingSetKind.EABS):
        result = rec.search(
            f"min_b[{kind.value}]",
            lambda kind=kind: search_engine.min_b(graph, a, kind, caps.budget, threads=caps.threads),
        )
        if result is None:
            continue
        zero = result.found and result.b == 0
        if decided:
            rec.compare(f"min_b[{kind.value}].zero_iff_satisfiable", zero, sat is not None, "search")
        if zero:
            back = reduction_chain.step4_backward(trace, result.witness)
            rec.compare(
                f"witness.backward[{kind.value}]",
                check_gamma_in_beta(phi, back, 2),
                True,
                "transport",
            )

    if sat is not None:
        subset = reduction_chain.step4_forward(sat)
        profile = subset_profile(graph, subset)
        rec.compare(
            "witness.forward",
            {
                "a": profile.a,
                "b": profile.b,
                "even": len(profile.even_checks),
                "lets": profile.flags.is_lets,
                "eabs": profile.flags.is_eabs,
            },
            {"a": a, "b": 0, "even": graph.n_chk, "lets": True, "eabs": True},
            "transport",
        )

    if graph.n_var > caps.enumerate_max_vars:
        reason = f"{graph.n_var} variable nodes exceed the enumeration cap"
        rec.skip("size_a_sets.perfect", reason, "search")
        return rec.report(instance)
    zero_sets = {}
    for kind in (TrappingSetKind.LETS, TrappingSetKind.EABS):
        listing = search_engine.enumerate_class(
            graph, a, graph.n_chk, kind, caps.budget, threads=caps.threads
        )
        rec.nodes += listing.nodes_expanded
        if listing.partial:
            rec.skip(f"size_a_sets.perfect[{kind.value}]", "enumeration budget exceeded", "search")
            continue
        imperfect = 0
        for entry in listing.entries:
            if entry.a != a:
                continue
            even = len(subset_profile(graph, entry.witness).even_checks)
            if entry.b != 0 or even != graph.n_chk:
                imperfect += 1
        rec.compare(f"size_a_sets.perfect[{kind.value}]", imperfect, 0, "search")
        zero_sets[kind] = [e.witness for e in listing.entries if e.b == 0]
    if len(zero_sets) == 2:
        rec.compare(
            "b0_lets_equal_b0_eabs",
            zero_sets[TrappingSetKind.LETS] == zero_sets[TrappingSetKind.EABS],
            True,
            "search",
        )
    return rec.report(instance)


def _verify_min_a(
    phi: MonotoneFormula, kind: TrappingSetKind, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    eabs = kind == TrappingSetKind.EABS
    rec = _Recorder("thm4" if eabs else "thm2", caps)
    inst = (
        min_a_reductions.build_min_a_eabs_instance(phi)
        if eabs
        else min_a_reductions.build_min_a_lets_instance(phi)
    )
    graph = inst.graph
    eta = phi.n_vars

    expected_size = (7 * eta, eta * (4 * eta + 4)) if eabs else (5 * eta, eta * (2 * eta + 3))
    rec.compare("graph.size", (graph.n_var, graph.n_chk), expected_size, "construction")
    a_target = (2 if eabs else 1) * eta + 2 * eta // 3 if eta % 3 == 0 else None
    rec.compare("target", (inst.b, inst.a_expected), (eta * (2 * eta + 1), a_target), "construction")
    rec.compare("trace.total", inst.trace.covers(graph.n_var, graph.n_chk), True, "construction")

    decided, sat = rec.oracle(phi, 1, "oracle.formula")
    # Decision form: some set with b = inst.b and a <= a_expected
    result = rec.search(
        f"min_a[{kind.value}]",
        lambda: search_engine.min_a(
            graph, inst.b, kind, caps.budget, threads=caps.threads, a_max=inst.a_expected
        ),
    )
    if result is not None:
        if decided:
            rec.compare(
                f"min_a[{kind.value}].iff_satisfiable",
                {"status": result.status.value, "a": result.a if result.found else None},
                {
                    "status": "found" if sat is not None else "infeasible",
                    "a": inst.a_expected if sat is not None else None,
                },
                "search",
            )
        if result.found:
            rec.compare(
                "search_witness.properties",
                min_a_reductions.gadget_property_violations(inst, result.witness),
                [],
                "gadget sweep",
            )
            back = min_a_reductions.min_a_backward(inst, result.witness)
            rec.compare("witness.backward", check_gamma_in_beta(phi, back, 1), True, "transport")

    if sat is not None:
        subset = min_a_reductions.min_a_forward(inst, sat)
        profile = subset_profile(graph, subset)
        rec.compare(
            "witness.forward",
            {"kind": profile.flags.has(kind), "a": profile.a, "b": profile.b},
            {"kind": True, "a": inst.a_expected, "b": inst.b},
            "transport",
        )
        rec.compare(
            "witness.round_trip",
            min_a_reductions.min_a_backward(inst, subset).render(),
            sat.render(),
            "transport",
        )

    if graph.n_var > caps.enumerate_max_vars:
        reason = f"{graph.n_var} variable nodes exceed the enumeration cap"
        rec.skip("all_sets.properties", reason, "gadget sweep")
    else:
        listing = search_engine.enumerate_class(
            graph, graph.n_var, graph.n_chk, kind, caps.budget, threads=caps.threads
        )
        rec.nodes += listing.nodes_expanded
        if listing.partial:
            rec.skip("all_sets.properties", "enumeration budget exceeded", "gadget sweep")
        else:
            offending = [
                e.witness
                for e in listing.entries
                if min_a_reductions.gadget_property_violations(inst, e.witness)
            ]
            rec.compare("all_sets.properties", offending, [], "gadget sweep")
    return rec.report(instance)


def verify_thm2(
    phi: MonotoneFormula, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    return _verify_min_a(phi, TrappingSetKind.LETS, caps, instance)


def verify_thm4(
    phi: MonotoneFormula, caps: VerificationCaps, instance: InstanceDescriptor
) -> VerificationReport:
    return _verify_min_a(phi, TrappingSetKind.EABS, caps, instance)


def verify_step(
    step: str,
    formula: MonotoneFormula,
    caps: Optional[VerificationCaps] = None,
    instance: Optional[InstanceDescriptor] = None,
    alpha: Optional[int] = None,
    beta: Optional[int] = None,
) -> VerificationReport:
    """Dispatch one pipeline by name ('1'..'4', 'thm2', 'thm4')"""
    caps = caps or VerificationCaps()
    instance = instance or describe(formula, "inline")
    if step == "1":
        return verify_step1(formula, beta or 3, caps, instance)
    if step == "2":
        return verify_step2(formula, caps, instance)
    if step == "3":
        return verify_step3(formula, alpha or 3, caps, instance)
    if step == "4":
        return verify_step4(formula, caps, instance)
    if step == "thm2":
        return verify_thm2(formula, caps, instance)
    if step == "thm4":
        return verify_thm4(formula, caps, instance)
    raise ValueError(f"unknown pipeline {step!r}; expected one of {', '.join(PIPELINES)}")


def _schedule(seed: int) -> Iterable[Tuple[str, MonotoneFormula, dict]]:
    sample = repeated_clause_formula()
    yield "1", sample, {"beta": 3}
    yield "1", sample, {"beta": 4}
    yield "1", sample, {"beta": 5}
    three = ClassDescriptor(require_beta=3)
    for offset, beta in enumerate((3, 4, 5)):
        yield "1", random_instance(three, 4, seed + offset, n_clauses=3), {"beta": beta}
    yield "2", MonotoneFormula.build(["x", "y", "z"], [[0, 1, 2]]), {}
    yield "3", sample, {"alpha": 3}
    cubic_four = ClassDescriptor(require_beta=4, require_cubic=True)
    yield "3", random_instance(cubic_four, 4, seed), {"alpha": 4}
    yield "4", random_instance(ClassDescriptor(require_beta=3, require_alpha=3), 6, seed), {}
    yield "4", random_instance(ClassDescriptor(require_beta=4, require_alpha=3), 8, seed), {}
    yield "4", random_instance(ClassDescriptor(require_beta=4, require_alpha=4), 6, seed), {}
    yield "thm2", sample, {}
    yield "thm4", sample, {}


def verify_all(seed: int = 0, caps: Optional[VerificationCaps] = None) -> SuiteReport:
    """Every pipeline over a fixed, seed-derived schedule of small instances"""
    caps = caps or VerificationCaps()
    reports = []
    for step, formula, params in _schedule(seed):
        instance = describe(formula, "schedule", seed=seed, step=step, **params)
        reports.append(verify_step(step, formula, caps, instance, **params))
    return SuiteReport(seed=seed, reports=tuple(reports))
