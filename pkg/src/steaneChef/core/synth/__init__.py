"""Greedy and fault-set guided synthesis of preparation circuits."""

from steaneChef.core.synth.greedy import EliminationState, cost, greedy_synth
from steaneChef.core.synth.guided import GuidedSynthesizer, SynthResult, SynthStats, guided_synth
from steaneChef.core.synth.quadruple import QuadrupleResult, synth_quadruple
from steaneChef.core.synth.synth_config import SynthConfig

__all__ = [
    "EliminationState",
    "GuidedSynthesizer",
    "QuadrupleResult",
    "SynthConfig",
    "SynthResult",
    "SynthStats",
    "cost",
    "greedy_synth",
    "guided_synth",
    "synth_quadruple",
]
