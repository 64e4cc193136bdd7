"""Utility decorators for steaneChef."""

import functools
import sys

import click

from steaneChef.logs.steanechef_logging import log
from steaneChef.utils.const import SUCCESS
from steaneChef.utils.errors import SteaneChefError


def handle_errors(func):
    """Map steaneChef errors raised by a click command onto process exit codes.

    The wrapped command may return an int exit code; ``None`` counts as success.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            result = func(*args, **kwargs)
        except SteaneChefError as exc:
            log.error("%s failed: %s", func.__name__, exc)
            click.secho(f"error: {exc}", fg="red", err=True)
            sys.exit(exc.exit_code)
        code = SUCCESS if result is None else int(result)
        if code != SUCCESS:
            sys.exit(code)
        return code

    return wrapper
