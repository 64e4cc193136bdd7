"""Codes CLI command module for steaneChef.

Lists the code registry and prints check-matrix files of registered codes.
"""

from pathlib import Path

import click

from steaneChef.cli.help_texts import ARGS_EXPORT_HELP, CODES_HELP
from steaneChef.core.codes import X, Z, available_codes, registry_lookup, serialize_check_file
from steaneChef.utils.const import CHECK_FILE_SUFFIX, SUCCESS
from steaneChef.utils.decorators import handle_errors
from steaneChef.utils.storage_utils import StorageUtils


@click.command(help=CODES_HELP)
@click.option("--export", "export_name", metavar="NAME", help=ARGS_EXPORT_HELP)
@click.pass_obj
@handle_errors
def codes(obj, export_name):
    """List the registered codes.

    Examples:

      List every code with its parameters and stabilizer weights:

        $ steanechef codes

      Write the check file of the Steane code into the output directory:

        $ steanechef --out build codes --export steane
    """
    if export_name:
        text = serialize_check_file(registry_lookup(export_name))
        out = (obj or {}).get("out")
        if out:
            path = StorageUtils.write_text(Path(out) / f"{export_name}{CHECK_FILE_SUFFIX}", text)
            click.echo(f"wrote {path}", err=True)
        else:
            click.echo(text, nl=False)
        return SUCCESS

    for name in available_codes():
        code = registry_lookup(name)
        x_weights = ",".join(str(w) for w in code.stabilizer_weights(X))
        z_weights = ",".join(str(w) for w in code.stabilizer_weights(Z))
        click.echo(f"{name:<14} {code.label():<14} X weights {x_weights}  Z weights {z_weights}")
    return SUCCESS
