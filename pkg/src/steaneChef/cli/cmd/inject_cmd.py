"""Inject CLI command module for steaneChef."""

import click

from steaneChef.cli.context import make_chef
from steaneChef.cli.help_texts import (
    ARGS_BUDGET_HELP,
    ARGS_CODE_HELP,
    ARGS_MAX_FAULTS_HELP,
    ARGS_PREP_ONLY_HELP,
    ARGS_PROTOCOL_HELP,
    INJECT_HELP,
)
from steaneChef.utils.decorators import handle_errors


@click.command(help=INJECT_HELP)
@click.option("--code", "code_ref", required=True, help=ARGS_CODE_HELP)
@click.argument("circuits", nargs=-1, type=click.Path(exists=True))
@click.option("--protocol", type=click.Path(exists=True, dir_okay=False), help=ARGS_PROTOCOL_HELP)
@click.option("--max-faults", type=click.IntRange(min=0), help=ARGS_MAX_FAULTS_HELP)
@click.option("--budget", type=click.IntRange(min=1), help=ARGS_BUDGET_HELP)
@click.option("--prep-only", is_flag=True, default=False, help=ARGS_PREP_ONLY_HELP)
@click.pass_obj
@handle_errors
def inject(obj, code_ref, circuits, protocol, max_faults, budget, prep_only):
    """Report every accepted fault combination that leaves block 1 too heavy.

    Exits with 1 when a counterexample is found.

    Examples:

      $ steanechef inject --code cc_4_8_8_17 runs/cc17 --max-faults 2

      $ steanechef inject --code cc_4_8_8_17 --protocol runs/cc17/protocol.txt --prep-only
    """
    report, code = make_chef(obj or {}).inject(
        code_ref,
        max_faults,
        circuits=circuits or None,
        protocol=protocol,
        budget=budget,
        prep_only=prep_only,
    )
    for k in sorted(report["combinations"], key=int):
        click.echo(f"{k} fault(s): {report['combinations'][k]} combinations, {report['accepted'][k]} accepted")
    click.echo(f"{len(report['counterexamples'])} counterexample(s)")
    return code
