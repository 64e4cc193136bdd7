"""Verify CLI command module for steaneChef."""

import json

import click

from steaneChef.cli.context import make_chef
from steaneChef.cli.help_texts import ARGS_CODE_HELP, VERIFY_HELP
from steaneChef.utils.decorators import handle_errors


@click.command(help=VERIFY_HELP)
@click.option("--code", "code_ref", required=True, help=ARGS_CODE_HELP)
@click.argument("circuits", nargs=-1, required=True, type=click.Path(exists=True))
@click.pass_obj
@handle_errors
def verify(obj, code_ref, circuits):
    """Verify four circuit files, or a directory written by ``synth``.

    Prints the JSON report and writes it to ``verify.json``.

    Examples:

      $ steanechef verify --code steane C1.circ C2.circ C3.circ C4.circ

      $ steanechef verify --code cc_4_8_8_17 runs/cc17
    """
    report, code = make_chef(obj or {}).verify(code_ref, circuits)
    click.echo(json.dumps(report, indent=2, sort_keys=True))
    return code
