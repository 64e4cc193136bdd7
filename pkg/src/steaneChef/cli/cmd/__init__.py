from steaneChef.cli.cmd.codes_cmd import codes
from steaneChef.cli.cmd.inject_cmd import inject
from steaneChef.cli.cmd.simulate_cmd import simulate
from steaneChef.cli.cmd.synth_cmd import synth
from steaneChef.cli.cmd.verify_cmd import verify

__all__ = ["codes", "inject", "simulate", "synth", "verify"]
