"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Verify Command                                          │
│                                                                                                  │
│  Description: Runs a verification pipeline, or the whole seeded schedule, and prints the JSON    │
│               report; optionally archives each report.                                           │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import Optional

import click

from commands.common import (
    budget_options,
    emit_json,
    json_option,
    load_formula,
    make_budget,
)
from config.settings import get_settings
from database.connection import configure
from models.formula import ClassDescriptor, MonotoneFormula
from services.archive import archive_report
from services.sat_logic import (
    find_unsatisfiable_cubic,
    random_instance,
    repeated_clause_formula,
)
from services.verification import (
    PIPELINES,
    VerificationCaps,
    describe,
    verify_all,
    verify_step,
)

logger = logging.getLogger(__name__)

FAILURE_EXIT_CODE = 1


def _random_formula(
    step: str, n_vars: int, seed: int, alpha: Optional[int], beta: Optional[int]
) -> MonotoneFormula:
    """Seeded input of the class the pipeline expects"""
    if step == "1":
        descriptor = ClassDescriptor(require_beta=3)
        return random_instance(descriptor, n_vars, seed, n_clauses=n_vars)
    if step == "2":
        descriptor = ClassDescriptor(require_beta=beta or 3)
    elif step == "3":
        descriptor = ClassDescriptor(require_beta=beta or 3, require_cubic=True)
    elif step == "4":
        descriptor = ClassDescriptor(require_beta=beta or 3, require_alpha=alpha or 3)
    else:
        descriptor = ClassDescriptor(require_beta=3, require_cubic=True)
    return random_instance(descriptor, n_vars, seed)


@click.command("verify")
@click.argument("step", type=click.Choice([*PIPELINES, "all"]))
@click.option(
    "--formula",
    "formula_file",
    type=click.Path(exists=True, dir_okay=False, allow_dash=True),
    default=None,
)
@click.option(
    "--random",
    "random_vars",
    type=click.IntRange(min=1),
    default=None,
    help="Generate a seeded instance with this many variables",
)
@click.option("--unsat", is_flag=True, help="thm2/thm4: search for an unsatisfiable cubic instance")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--alpha", type=click.IntRange(min=3), default=None)
@click.option("--beta", type=click.IntRange(min=3), default=None)
@click.option(
    "--max-vars", type=click.IntRange(min=1), default=None, help="Oracle cap; larger legs are skipped"
)
@click.option("--scan-max-vars", type=click.IntRange(min=1), default=None)
@budget_options
@json_option
@click.option("--archive", is_flag=True, help="Store the report in the run archive")
@click.option("--archive-url", default=None, help="SQLAlchemy URL of the archive database")
@click.pass_context
def verify_command(
    ctx,
    step,
    formula_file,
    random_vars,
    unsat,
    seed,
    alpha,
    beta,
    max_vars,
    scan_max_vars,
    max_nodes,
    max_seconds,
    max_size,
    threads,
    json_out,
    archive,
    archive_url,
):
    """Run pipeline STEP (1, 2, 3, 4, thm2, thm4 or all) and report every check"""
    settings = get_settings()
    caps = VerificationCaps(
        oracle_max_vars=max_vars or settings.oracle_max_vars,
        scan_max_vars=scan_max_vars or settings.scan_max_vars,
        budget=make_budget(max_nodes, max_seconds, max_size),
        threads=threads,
    )

    if step == "all":
        suite = verify_all(seed, caps)
        reports = list(suite.reports)
        payload = suite.model_dump(mode="json")
        passed = suite.passed
    else:
        params = {k: v for k, v in (("alpha", alpha), ("beta", beta)) if v is not None}
        if formula_file:
            formula = load_formula(formula_file)
            instance = describe(formula, formula_file, **params)
        elif unsat:
            formula = find_unsatisfiable_cubic(random_vars or 6, seed, max_vars=caps.oracle_max_vars)
            instance = describe(formula, "find-unsat", seed=seed, **params)
        elif random_vars:
            formula = _random_formula(step, random_vars, seed, alpha, beta)
            instance = describe(formula, "random", seed=seed, **params)
        else:
            formula = repeated_clause_formula()
            instance = describe(formula, "repeated-clause", **params)
        report = verify_step(step, formula, caps, instance, alpha=alpha, beta=beta)
        reports = [report]
        payload = report.model_dump(mode="json")
        passed = report.passed

    if archive:
        if archive_url:
            configure(archive_url, settings.archive_echo)
        for report in reports:
            archive_report(report)

    emit_json(payload, json_out)
    if not passed:
        ctx.exit(FAILURE_EXIT_CODE)
