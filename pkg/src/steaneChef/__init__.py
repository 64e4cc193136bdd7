"""
steaneChef - Fault-tolerant state preparation for CSS codes
===========================================================

Synthesizes the four CNOT circuits of a Steane-type verified |0>_L preparation,
checks them with the fault-set distinctness conditions, simulates the protocol
under circuit-level noise and injects faults exhaustively.

Main Components:
---------------
- CssCode / registry_lookup: codes and the built-in registry
- synth_quadruple: greedy and fault-set guided circuit synthesis
- verify_quadruple: the three distinctness conditions
- build_protocol: the verified preparation on four blocks
- estimate_x_logical / estimate_z_logical: Monte Carlo with post-selection
- exhaustive_inject: protocol-level strict fault tolerance
- SteaneChef: the pipeline behind the ``steanechef`` command
"""

__version__ = "0.1.0"

from steaneChef.core.codes import CssCode, available_codes, registry_lookup
from steaneChef.core.ftcheck import verify_quadruple
from steaneChef.core.protocol import build_protocol, parse_protocol, serialize_protocol
from steaneChef.core.sim import NoiseModel, estimate_x_logical, estimate_z_logical, exhaustive_inject
from steaneChef.core.synth import SynthConfig, synth_quadruple
from steaneChef.core.chefs import BaseChef, SteaneChef

__all__ = [
    "BaseChef",
    "CssCode",
    "NoiseModel",
    "SteaneChef",
    "SynthConfig",
    "available_codes",
    "build_protocol",
    "estimate_x_logical",
    "estimate_z_logical",
    "exhaustive_inject",
    "parse_protocol",
    "registry_lookup",
    "serialize_protocol",
    "synth_quadruple",
    "verify_quadruple",
]
