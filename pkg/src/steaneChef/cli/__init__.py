"""
Command-line interface for steaneChef.

This module provides the main command group and registers the subcommands.
"""

import click

from steaneChef import __version__
from steaneChef.cli.cmd import codes, inject, simulate, synth, verify
from steaneChef.cli.context import config_callback, threads_callback
from steaneChef.cli.help_texts import (
    ARGS_CONFIG_HELP,
    ARGS_OUT_HELP,
    ARGS_PROGRESS_HELP,
    ARGS_SEED_HELP,
    ARGS_THREADS_HELP,
    ARGS_VERBOSE_HELP,
    MAIN_HELP,
)
from steaneChef.logs.steanechef_logging import verbose_callback


@click.group(help=MAIN_HELP)
@click.version_option(version=__version__, message="%(prog)s %(version)s")
@click.option("--verbose", is_flag=True, help=ARGS_VERBOSE_HELP, callback=verbose_callback, expose_value=False)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), help=ARGS_CONFIG_HELP,
              callback=config_callback, expose_value=False)
@click.option("--seed", type=int, help=ARGS_SEED_HELP)
@click.option("--threads", type=int, help=ARGS_THREADS_HELP, callback=threads_callback)
@click.option("--out", type=click.Path(file_okay=False), help=ARGS_OUT_HELP)
@click.option("--progress", is_flag=True, default=False, help=ARGS_PROGRESS_HELP)
@click.pass_context
def cli(ctx, seed, threads, out, progress):
    """steaneChef CLI."""
    obj = ctx.ensure_object(dict)
    obj.update(seed=seed, threads=threads, out=out, progress=progress)


# Add commands
cli.add_command(codes)
cli.add_command(synth)
cli.add_command(verify)
cli.add_command(simulate)
cli.add_command(inject)

if __name__ == "__main__":
    cli()
