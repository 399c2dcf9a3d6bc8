#!/usr/bin/env python3
"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Acceptance Run                                          │
│                                                                                                  │
│  Description: Runs the desk-scale acceptance sweeps over the verification pipelines.             │
│               Prints one line per report and exits 1 on any contradiction.                       │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import os
import sys
from typing import Iterator, List, Tuple

import click

# Add the project root to the path
sys.path.append(os.path.join(os.path.dirname(__file__), ".."))

from models.formula import ClassDescriptor, MonotoneFormula  # noqa: E402
from models.report import VerificationReport  # noqa: E402
from models.search import SearchBudget  # noqa: E402
from services.archive import archive_report  # noqa: E402
from services.sat_logic import (  # noqa: E402
    find_unsatisfiable_cubic,
    random_instance,
    repeated_clause_formula,
)
from services.verification import VerificationCaps, describe, verify_step  # noqa: E402

# (alpha, beta, n_vars) with alpha * n_vars divisible by beta
REGULAR_SHAPES = ((3, 3, 9), (3, 4, 12), (4, 3, 6), (4, 4, 10))


def step1_sweep() -> Iterator[Tuple[str, MonotoneFormula, dict]]:
    """Every 3-uniform formula over three variables with up to four clauses"""
    for copies in range(1, 5):
        phi = repeated_clause_formula(copies=copies)
        for beta in (3, 4, 5):
            yield "1", phi, {"beta": beta, "copies": copies}


def end_leg_sweep(count: int, seed: int) -> Iterator[Tuple[str, MonotoneFormula, dict]]:
    for i in range(count):
        alpha, beta, n_vars = REGULAR_SHAPES[i % len(REGULAR_SHAPES)]
        descriptor = ClassDescriptor(require_alpha=alpha, require_beta=beta)
        yield "4", random_instance(descriptor, n_vars, seed + i), {"alpha": alpha, "beta": beta}


def min_a_sweep(count: int, seed: int) -> Iterator[Tuple[str, MonotoneFormula, dict]]:
    cubic = ClassDescriptor(require_beta=3, require_cubic=True)
    instances: List[MonotoneFormula] = [repeated_clause_formula()]
    if count:
        instances.append(find_unsatisfiable_cubic(6, seed))
        instances.extend(random_instance(cubic, 6, seed + i) for i in range(count - 1))
    for phi in instances:
        yield "thm2", phi, {}
        yield "thm4", phi, {}


@click.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--regular", type=int, default=20, show_default=True, help="Random regular formulas for step 4"
)
@click.option(
    "--eta6", type=int, default=10, show_default=True, help="Cubic instances with six variables (0 skips)"
)
@click.option("--max-nodes", type=int, default=10**8, show_default=True)
@click.option("--archive", is_flag=True, help="Store every report in the run archive")
def main(seed, regular, eta6, max_nodes, archive):
    print("🚀 Running trapset acceptance sweeps...")
    print("=" * 50)

    caps = VerificationCaps(budget=SearchBudget(max_nodes=max_nodes))
    stages = (
        ("Step 1 equivalence", step1_sweep()),
        ("Step 4 end leg", end_leg_sweep(regular, seed)),
        ("Min-a end to end", min_a_sweep(eta6, seed)),
    )
    failed: List[VerificationReport] = []
    skipped = 0
    try:
        for title, schedule in stages:
            print(f"\n📋 {title}")
            for step, formula, params in schedule:
                instance = describe(formula, "acceptance", seed=seed, step=step, **params)
                options = {k: v for k, v in params.items() if k in ("alpha", "beta")}
                report = verify_step(step, formula, caps, instance, **options)
                skipped += len(report.skipped())
                status = "✅" if report.passed else "❌"
                print(
                    f"   {status} {report.pipeline:<6} n={formula.n_vars:<3} m={formula.n_clauses:<3} "
                    f"{len(report.checks)} checks, {len(report.skipped())} skipped"
                )
                if not report.passed:
                    failed.append(report)
                    for check in report.failures():
                        print(
                            f"      {check.name}: observed {check.observed!r}, "
                            f"expected {check.expected!r}"
                        )
                if archive:
                    archive_report(report)
    except Exception as e:
        print(f"\n❌ Acceptance run aborted: {e}")
        sys.exit(2)

    print(f"\n📊 {skipped} checks skipped over the caps")
    if failed:
        print(f"❌ {len(failed)} reports contradicted their expectations")
        sys.exit(1)
    print("✅ All acceptance sweeps passed")


if __name__ == "__main__":
    main()
