"""Noise model, frame simulation, decoding, estimators, fault injection and the stim bridge."""

from steaneChef.core.sim.estimators import (
    CSV_COLUMNS,
    SimResult,
    SlopeFit,
    estimate_x_logical,
    estimate_z_logical,
    fit_slope,
    results_frame,
    sweep,
    wilson_interval,
)
from steaneChef.core.sim.frame_simulator import FrameSimulator, ShotRecord, inject_faults, run_shot
from steaneChef.core.sim.injector import (
    FaultEffectTable,
    InjectionReport,
    exhaustive_inject,
    witness_faults,
)
from steaneChef.core.sim.lut_decoder import LutDecoder, build_lut
from steaneChef.core.sim.noise import NoiseModel
from steaneChef.core.sim.stim_bridge import ParityRecord, frame_parities, tableau_replay, to_stim_circuit

__all__ = [
    "CSV_COLUMNS",
    "FaultEffectTable",
    "FrameSimulator",
    "InjectionReport",
    "LutDecoder",
    "NoiseModel",
    "ParityRecord",
    "ShotRecord",
    "SimResult",
    "SlopeFit",
    "build_lut",
    "estimate_x_logical",
    "estimate_z_logical",
    "exhaustive_inject",
    "fit_slope",
    "frame_parities",
    "inject_faults",
    "results_frame",
    "run_shot",
    "sweep",
    "tableau_replay",
    "to_stim_circuit",
    "witness_faults",
]
