"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Search Command                                          │
│                                                                                                  │
│  Description: Exact min-b, min-a and class enumeration over an alist Tanner graph.               │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import click

from commands.common import (
    KINDS,
    budget_options,
    emit_json,
    json_option,
    load_graph,
    make_budget,
)
from models.search import SearchStatus
from services import search_engine
from utils.errors import SearchError

BUDGET_EXIT_CODE = 3


@click.command("search")
@click.argument("alist_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option(
    "--problem",
    type=click.Choice(["min-b", "min-a", "enumerate"]),
    default="min-b",
    show_default=True,
)
@click.option(
    "-a", "a", type=int, default=None, help="Subset size (min-b) or largest size (min-a, enumerate)"
)
@click.option(
    "-b", "b", type=int, default=None, help="Odd-check count (min-a) or bound (enumerate)"
)
@click.option(
    "--kind",
    type=click.Choice(KINDS, case_sensitive=False),
    default="LETS",
    show_default=True,
)
@click.option("--no-prune", is_flag=True, help="Disable the class-specific pruning rules")
@budget_options
@json_option
@click.pass_context
def search_command(
    ctx,
    alist_file,
    problem,
    a,
    b,
    kind,
    no_prune,
    max_nodes,
    max_seconds,
    max_size,
    threads,
    json_out,
):
    """Search ALIST_FILE for trapping sets of one kind"""
    graph = load_graph(alist_file)
    budget = make_budget(max_nodes, max_seconds, max_size)
    options = dict(kind=kind.upper(), budget=budget, prune=not no_prune, threads=threads)

    if problem == "min-b":
        if a is None:
            raise SearchError("min-b needs -a")
        result = search_engine.min_b(graph, a, **options)
    elif problem == "min-a":
        if b is None:
            raise SearchError("min-a needs -b")
        result = search_engine.min_a(graph, b, a_max=a, **options)
    else:
        if a is None or b is None:
            raise SearchError("enumerate needs -a and -b")
        result = search_engine.enumerate_class(graph, a, b, **options)

    emit_json(result.model_dump(mode="json"), json_out)
    if result.status == SearchStatus.BUDGET_EXCEEDED:
        ctx.exit(BUDGET_EXIT_CODE)
