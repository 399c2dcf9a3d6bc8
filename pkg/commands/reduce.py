"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Reduce Command                                          │
│                                                                                                  │
│  Description: Runs a reduction on a monotone formula file and writes the resulting alist or      │
│               formula plus the JSON reduction trace.                                             │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from pathlib import Path
from typing import Optional

import click

from commands.common import emit_json, load_formula, text_digest
from services import min_a_reductions, reduction_chain
from utils.alist import write_alist
from utils.errors import ReductionError
from utils.formula_io import write_formula

logger = logging.getLogger(__name__)

TARGETS = (
    "step1",
    "step2",
    "step3",
    "step4",
    "min-b-lets",
    "min-b-eabs",
    "min-a-lets",
    "min-a-eabs",
)


def _reduce(formula, target: str, alpha: Optional[int], beta: Optional[int]):
    """(artifact text, summary, trace)"""
    if target == "step1":
        if beta is None:
            raise ReductionError("step1 needs --beta")
        out, trace = reduction_chain.step1_expand(formula, beta)
        return write_formula(out), {"n_vars": out.n_vars, "n_clauses": out.n_clauses}, trace
    if target == "step2":
        out, trace = reduction_chain.step2_make_cubic(formula)
        return write_formula(out), {"n_vars": out.n_vars, "n_clauses": out.n_clauses}, trace
    if target == "step3":
        if alpha is None:
            raise ReductionError("step3 needs --alpha")
        out, trace = reduction_chain.step3_make_alpha_regular(formula, alpha)
        return write_formula(out), {"n_vars": out.n_vars, "n_clauses": out.n_clauses}, trace

    if target == "step4":
        graph, a, trace = reduction_chain.step4_formula_to_tanner(formula)
        summary = {"a": a, "b": 0}
    elif target.startswith("min-b"):
        if alpha is None or beta is None:
            raise ReductionError(f"{target} needs --alpha and --beta")
        # one graph serves both kinds: its (a, 0) LETS and EABS coincide
        graph, a, trace = reduction_chain.full_min_b_chain(formula, alpha, beta)
        summary = {"a": a, "b": 0}
    else:
        build = (
            min_a_reductions.build_min_a_lets_instance
            if target == "min-a-lets"
            else min_a_reductions.build_min_a_eabs_instance
        )
        instance = build(formula)
        graph, trace = instance.graph, instance.trace
        summary = {"a": instance.a_expected, "b": instance.b}
    summary.update(n_var=graph.n_var, n_chk=graph.n_chk, n_edges=graph.n_edges)
    return write_alist(graph), summary, trace


@click.command("reduce")
@click.argument("formula_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("--target", type=click.Choice(TARGETS), required=True)
@click.option("--alpha", type=click.IntRange(min=3), default=None)
@click.option("--beta", type=click.IntRange(min=3), default=None)
@click.option(
    "--out",
    type=click.Path(dir_okay=False),
    default=None,
    help="Artifact path (alist or formula); stdout when omitted",
)
@click.option("--trace", "trace_out", type=click.Path(dir_okay=False), default=None)
@click.option("--summary", "summary_out", type=click.Path(dir_okay=False), default=None)
def reduce_command(formula_file, target, alpha, beta, out, trace_out, summary_out):
    """Reduce FORMULA_FILE to the TARGET instance"""
    formula = load_formula(formula_file)
    artifact, summary, trace = _reduce(formula, target, alpha, beta)
    summary = {"target": target, "digest": text_digest(artifact), **summary}
    logger.info(f"reduce {target}: {summary}")

    if out:
        Path(out).write_text(artifact, encoding="utf-8")
    else:
        click.echo(artifact, nl=False)
    if trace_out:
        emit_json(trace.model_dump(mode="json"), trace_out)
    if summary_out:
        emit_json(summary, summary_out)
