"""Simulate CLI command module for steaneChef.

Runs both logical-error estimators over a list of physical error rates and
writes one CSV per estimator.
"""

import click

from steaneChef.cli.context import make_chef
from steaneChef.cli.help_texts import (
    ARGS_CODE_HELP,
    ARGS_FIT_HELP,
    ARGS_FORCE_HELP,
    ARGS_P_HELP,
    ARGS_PROTOCOL_HELP,
    ARGS_SHOTS_HELP,
    ARGS_STIM_HELP,
    ARGS_SWEEP_HELP,
    SIMULATE_HELP,
)
from steaneChef.utils.const import DEFAULT_SWEEP, SUCCESS
from steaneChef.utils.decorators import handle_errors

DEFAULT_SHOTS = 100_000
DEFAULT_P = (1e-3,)


def parse_rates(ctx, param, value):
    """Click callback turning ``1e-3,2e-3`` into a tuple of floats."""
    if value is None:
        return None
    try:
        rates = tuple(float(v) for v in value.split(",") if v.strip())
    except ValueError:
        raise click.BadParameter(f"not a comma-separated list of numbers: {value}", ctx=ctx, param=param)
    if not rates or any(not 0.0 <= p <= 1.0 for p in rates):
        raise click.BadParameter("error rates must lie in [0, 1]", ctx=ctx, param=param)
    return rates


@click.command(help=SIMULATE_HELP)
@click.option("--code", "code_ref", required=True, help=ARGS_CODE_HELP)
@click.argument("circuits", nargs=-1, type=click.Path(exists=True))
@click.option("--protocol", type=click.Path(exists=True, dir_okay=False), help=ARGS_PROTOCOL_HELP)
@click.option("--p", "ps", callback=parse_rates, help=ARGS_P_HELP)
@click.option("--shots", type=click.IntRange(min=1), default=DEFAULT_SHOTS, show_default=True, help=ARGS_SHOTS_HELP)
@click.option("--sweep", "use_sweep", is_flag=True, default=False, help=ARGS_SWEEP_HELP)
@click.option("--force", is_flag=True, default=False, help=ARGS_FORCE_HELP)
@click.option("--fit", is_flag=True, default=False, help=ARGS_FIT_HELP)
@click.option("--stim", "stim_path", type=click.Path(dir_okay=False), help=ARGS_STIM_HELP)
@click.pass_obj
@handle_errors
def simulate(obj, code_ref, circuits, protocol, ps, shots, use_sweep, force, fit, stim_path):
    """Simulate the protocol.

    Takes four circuit files, a directory written by ``synth`` or ``--protocol``;
    without any of them a quadruple is synthesized first.

    Examples:

      $ steanechef simulate --code steane --p 1e-3 --shots 100000

      $ steanechef --threads 8 simulate --code cc_4_8_8_17 runs/cc17 --sweep --fit
    """
    if ps is None:
        ps = DEFAULT_SWEEP if use_sweep else DEFAULT_P
    chef = make_chef(obj or {})
    x_results, z_results, slopes = chef.simulate(
        code_ref,
        ps,
        shots,
        circuits=circuits or None,
        protocol=protocol,
        force=force,
        fit=fit,
        stim_path=stim_path,
    )
    for x, z in zip(x_results, z_results):
        click.echo(
            f"p={x.p:g}  r_A={x.r_A:.4f}  p_L(X)={x.p_l:.3e}  p_L(Z)={z.p_l:.3e}  ({x.shots} shots)"
        )
    if slopes:
        for label, fitted in sorted(slopes.items()):
            click.echo(f"slope {label}: {fitted['slope']:.3f}" if fitted else f"slope {label}: n/a")
    return SUCCESS


