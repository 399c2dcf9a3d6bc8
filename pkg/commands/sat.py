"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                           SAT Command                                            │
│                                                                                                  │
│  Description: gamma-IN-beta solving, assignment checks, class validation and seeded              │
│               instance generation for monotone formulas.                                         │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import itertools
from pathlib import Path
from typing import Optional

import click

from commands.common import emit_json, json_option, load_formula
from models.formula import Assignment, ClassDescriptor
from services.sat_logic import (
    brute_force_gamma_in_beta,
    check_gamma_in_beta,
    find_unsatisfiable_cubic,
    iter_gamma_in_beta,
    random_instance,
    validate_class,
)
from utils.errors import AssignmentError
from utils.formula_io import write_formula

FAILURE_EXIT_CODE = 1

formula_argument = click.argument(
    "formula_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True)
)


def _descriptor(beta: Optional[int], alpha: Optional[int], cubic: bool) -> ClassDescriptor:
    return ClassDescriptor(require_beta=beta, require_alpha=alpha, require_cubic=cubic)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@click.group("sat")
def sat_group():
    """Monotone gamma-IN-beta SAT tools"""


@sat_group.command("solve")
@formula_argument
@click.option("--gamma", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--all", "all_solutions", is_flag=True, help="List every solution (see --limit)")
@click.option("--limit", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--max-vars", type=click.IntRange(min=1), default=None)
@json_option
def solve_command(formula_file, gamma, all_solutions, limit, max_vars, json_out):
    """Lexicographically first gamma-IN-beta assignment of FORMULA_FILE"""
    formula = load_formula(formula_file)
    first = brute_force_gamma_in_beta(formula, gamma, max_vars=max_vars)
    payload = {
        "gamma": gamma,
        "satisfiable": first is not None,
        "assignment": first.to_mapping(formula) if first else None,
    }
    if all_solutions and first is not None:
        solutions = itertools.islice(iter_gamma_in_beta(formula, gamma), limit)
        payload["solutions"] = [s.render() for s in solutions]
    emit_json(payload, json_out)


@sat_group.command("check")
@formula_argument
@click.option("--gamma", type=click.IntRange(min=0), default=1, show_default=True)
@click.option(
    "--true",
    "true_names",
    default="",
    help="Comma-separated names of the true variables; all others are false",
)
@click.pass_context
def check_command(ctx, formula_file, gamma, true_names):
    """Exit 0 iff the assignment satisfies every clause exactly gamma times"""
    formula = load_formula(formula_file)
    names = [n for n in (part.strip() for part in true_names.split(",")) if n]
    unknown = [n for n in names if n not in formula.variables]
    if unknown:
        raise AssignmentError(f"unknown variables: {', '.join(unknown)}")
    assignment = Assignment.from_true_set(formula.n_vars, map(formula.index_of, names))
    ok = check_gamma_in_beta(formula, assignment, gamma)
    emit_json({"gamma": gamma, "assignment": assignment.render(), "satisfies": ok}, None)
    if not ok:
        ctx.exit(FAILURE_EXIT_CODE)


@sat_group.command("validate")
@formula_argument
@click.option("--beta", type=click.IntRange(min=1), default=None)
@click.option("--alpha", type=click.IntRange(min=1), default=None)
@click.option("--cubic", is_flag=True)
@json_option
@click.pass_context
def validate_command(ctx, formula_file, beta, alpha, cubic, json_out):
    """List every clause-width and occurrence violation"""
    formula = load_formula(formula_file)
    violations = validate_class(formula, _descriptor(beta, alpha, cubic))
    emit_json(
        {
            "valid": not violations,
            "beta": formula.beta,
            "alpha": formula.alpha,
            "violations": [v.model_dump(mode="json") for v in violations],
        },
        json_out,
    )
    if violations:
        ctx.exit(FAILURE_EXIT_CODE)


@sat_group.command("generate")
@click.option("--vars", "n_vars", type=click.IntRange(min=1), required=True)
@click.option("--beta", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--alpha", type=click.IntRange(min=1), default=None)
@click.option("--cubic", is_flag=True)
@click.option("--clauses", "n_clauses", type=click.IntRange(min=0), default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def generate_command(n_vars, beta, alpha, cubic, n_clauses, seed, out):
    """Seeded random monotone formula of the requested class"""
    formula = random_instance(_descriptor(beta, alpha, cubic), n_vars, seed, n_clauses=n_clauses)
    _write(write_formula(formula), out)


@sat_group.command("find-unsat")
@click.option("--vars", "n_vars", type=click.IntRange(min=3), default=6, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--attempts", type=click.IntRange(min=1), default=500, show_default=True)
@click.option("--max-vars", type=click.IntRange(min=1), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def find_unsat_command(n_vars, seed, attempts, max_vars, out):
    """First seeded cubic 3-uniform formula with no 1-IN-3 assignment"""
    formula = find_unsatisfiable_cubic(n_vars, seed, attempts=attempts, max_vars=max_vars)
    _write(write_formula(formula), out)
