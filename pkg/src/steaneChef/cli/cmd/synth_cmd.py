"""Synth CLI command module for steaneChef.

Writes the four preparation circuits, the assembled protocol, a metrics table,
the verification report and the run manifest.
"""

import click

from steaneChef.cli.context import make_chef
from steaneChef.cli.help_texts import ARGS_BASELINE_HELP, ARGS_CODE_HELP, SYNTH_HELP
from steaneChef.logs.steanechef_logging import log
from steaneChef.utils.const import SUCCESS, VIOLATIONS
from steaneChef.utils.decorators import handle_errors


@click.command(help=SYNTH_HELP)
@click.option("--code", "code_ref", required=True, help=ARGS_CODE_HELP)
@click.option("--baseline", is_flag=True, default=False, help=ARGS_BASELINE_HELP)
@click.pass_obj
@handle_errors
def synth(obj, code_ref, baseline):
    """Synthesize C1..C4 for a code.

    Examples:

      $ steanechef synth --code steane

      $ steanechef --seed 7 --out runs/cc17 synth --code cc_4_8_8_17
    """
    chef = make_chef(obj or {})
    result, manifest = chef.synth(code_ref, baseline=baseline)
    click.echo(result.metrics().to_string(index=False))
    for condition in result.report.conditions:
        click.echo(f"condition {condition.number} ({condition.basis}): {'pass' if condition.passed else 'FAIL'}")
    log.debug("manifest at %s", manifest)
    return SUCCESS if result.report.ok else VIOLATIONS
