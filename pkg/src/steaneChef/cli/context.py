"""Shared state of a CLI invocation: global options and the chef built from them."""

from pathlib import Path
from typing import Any, Dict, Optional

import click

from steaneChef.config.config import Config, apply_config_file
from steaneChef.core.chefs import SteaneChef
from steaneChef.core.synth import SynthConfig
from steaneChef.utils.const import CONFIG_KEY_THREADS
from steaneChef.utils.errors import ConfigParseError

INI_SUFFIXES = (".ini", ".cfg")


def _obj(ctx: click.Context) -> Dict[str, Any]:
    return ctx.ensure_object(dict)


def config_callback(ctx: click.Context, param, value: Optional[str]) -> Optional[str]:
    """``--config``: INI files update :class:`Config`, anything else is a synthesis config."""
    if value is None:
        return value
    if Path(value).suffix.lower() in INI_SUFFIXES:
        return apply_config_file(ctx, param, value)
    try:
        _obj(ctx)["synth_config"] = SynthConfig.from_file(value)
    except ConfigParseError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)
    return value


def threads_callback(ctx: click.Context, param, value: Optional[int]) -> Optional[int]:
    if value is None:
        return value
    if value < 1:
        raise click.BadParameter("must be at least 1", ctx=ctx, param=param)
    Config().set(CONFIG_KEY_THREADS, value)
    return value


def make_chef(obj: Dict[str, Any]) -> SteaneChef:
    """A chef configured from the global options, echoing artifacts to stderr."""
    chef = SteaneChef(
        out_dir=obj.get("out"),
        synth_config=obj.get("synth_config"),
        seed=obj.get("seed"),
        progress=obj.get("progress", False),
    )
    chef.register_callback("artifact", lambda path: click.echo(f"wrote {path}", err=True))
    return chef
