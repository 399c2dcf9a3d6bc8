"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                       Trapset Toolkit CLI                                        │
│                                                                                                  │
│  Description: Entry point: reduce, search, verify, sat and runs subcommands.                     │
│               Exit codes: 0 pass, 1 verification failure, 2 usage or input error, 3 budget.      │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
import os
import sys

import click
from pydantic import ValidationError

# Add the current directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from commands import (  # noqa: E402
    reduce_command,
    runs_command,
    sat_group,
    search_command,
    verify_command,
)
from config.settings import get_settings  # noqa: E402
from utils.errors import ToolkitError  # noqa: E402

logger = logging.getLogger(__name__)

USAGE_EXIT_CODE = 2


class ToolkitGroup(click.Group):
    """Maps toolkit errors to exit codes instead of tracebacks"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ToolkitError as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error: {exc}", err=True)
            ctx.exit(exc.exit_code)
        except ValidationError as exc:
            click.echo(f"error: invalid input: {exc}", err=True)
            ctx.exit(USAGE_EXIT_CODE)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(USAGE_EXIT_CODE)


@click.group(cls=ToolkitGroup)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Overrides TRAPSET_LOG_LEVEL",
)
@click.version_option("1.0.0", prog_name="trapset")
def cli(log_level):
    """Trapping-set taxonomy toolkit for LDPC Tanner graphs"""
    logging.basicConfig(
        level=(log_level or get_settings().log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


cli.add_command(reduce_command)
cli.add_command(search_command)
cli.add_command(verify_command)
cli.add_command(sat_group)
cli.add_command(runs_command)


if __name__ == "__main__":
    cli()
