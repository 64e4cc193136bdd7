"""
Synthesis of the four preparation circuits of the verified protocol.

C1 comes from plain greedy elimination. C2 is guided by the X faults of C1, C3 by the
Z faults of C1 and C2, and C4 by both the X faults of C3 and the Z faults of C1 and C2,
with the Z faults of C3 on its own side of the comparison.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import pandas as pd

from steaneChef.core.circuit.prep_circuit import PrepCircuit
from steaneChef.core.codes.css_code import X, Z, CssCode
from steaneChef.core.faults.fault_set import FaultSet, fault_set
from steaneChef.core.ftcheck.strict_ft import VerificationReport, verify_quadruple
from steaneChef.core.synth.greedy import greedy_synth
from steaneChef.core.synth.guided import GuidedSynthesizer, SynthStats
from steaneChef.core.synth.synth_config import SynthConfig

logger = logging.getLogger(__name__)

STAGES = ("C1", "C2", "C3", "C4")
# CNOT layers the verification adds on top of the deepest preparation circuit
TRANSVERSAL_LAYERS = 2


@dataclass
class QuadrupleResult:
    """
    Four preparation circuits, their synthesis statistics and verification report.

    Unpacks as ``c1, c2, c3, c4 = result``.
    """

    code: CssCode
    circuits: List[PrepCircuit]
    stats: List[SynthStats] = field(default_factory=list)
    report: Optional[VerificationReport] = None

    def __iter__(self) -> Iterator[PrepCircuit]:
        return iter(self.circuits)

    def __len__(self) -> int:
        return len(self.circuits)

    def __getitem__(self, index: int) -> PrepCircuit:
        return self.circuits[index]

    @property
    def total_cnots(self) -> int:
        return sum(c.cnot_count for c in self.circuits)

    @property
    def cnot_depth(self) -> int:
        return max(c.depth() for c in self.circuits) + TRANSVERSAL_LAYERS

    def metrics(self) -> pd.DataFrame:
        """One row per circuit plus a ``total`` row for the assembled protocol."""
        rows = []
        for name, c, st in zip(STAGES, self.circuits, self.stats or [None] * 4):
            rows.append(
                {
                    "code": self.code.name,
                    "circuit": name,
                    "cnots": c.cnot_count,
                    "depth": c.depth(),
                    "full_depth": c.full_depth(),
                    "backtracks": st.backtracks if st else 0,
                    "restarts": st.restarts if st else 0,
                    "seed": st.seed if st else None,
                }
            )
        rows.append(
            {
                "code": self.code.name,
                "circuit": "total",
                "cnots": self.total_cnots,
                "depth": self.cnot_depth,
                "full_depth": self.cnot_depth + 2,
                "backtracks": sum(r["backtracks"] for r in rows),
                "restarts": sum(r["restarts"] for r in rows),
                "seed": None,
            }
        )
        return pd.DataFrame(rows)

    def to_dict(self) -> Dict[str, object]:
        return {
            "code": self.code.name,
            "circuits": [c.to_dict() for c in self.circuits],
            "stats": [s.to_dict() for s in self.stats],
            "report": self.report.to_dict() if self.report is not None else None,
        }


def synth_quadruple(code: CssCode, cfg: Optional[SynthConfig] = None, verify: bool = True) -> QuadrupleResult:
    """
    Synthesize C1..C4 for ``code`` and check the three distinctness conditions.

    Every stage uses ``cfg.seed``; guided stages restart with ``seed ^ r``.

    Raises:
        SynthesisExhaustedError: If a guided stage runs out of restarts.
    """
    cfg = cfg or SynthConfig()
    t = code.t
    logger.info("synthesizing quadruple for %s %s, t=%d", code.name, code.label(), t)

    c1 = greedy_synth(code, cfg)
    stats = [SynthStats("C1", c1.cnot_count, c1.depth(), seed=cfg.seed)]

    def guided(stage, refs, ref_circuits, companions=None, start_from_rref=False) -> PrepCircuit:
        if t < 1:
            refs, companions = {}, {}
        synth = GuidedSynthesizer(
            code,
            t,
            cfg,
            refs=refs,
            companions=companions,
            ref_circuits=ref_circuits,
            start_from_rref=start_from_rref,
            stage=stage,
        )
        result = synth.run()
        stats.append(result.stats)
        return result.circuit

    c2 = guided("C2", {X: fault_set(c1, X)}, {X: [c1]})
    z12: FaultSet = fault_set(c1, Z).union(fault_set(c2, Z))
    c3 = guided("C3", {Z: z12}, {Z: [c1, c2]}, start_from_rref=cfg.rref_stage3)
    c4 = guided(
        "C4",
        {X: fault_set(c3, X), Z: z12},
        {X: [c3], Z: [c1, c2]},
        companions={Z: fault_set(c3, Z)},
        start_from_rref=cfg.start_from_rref,
    )

    result = QuadrupleResult(code, [c1, c2, c3, c4], stats)
    if verify:
        result.report = verify_quadruple(c1, c2, c3, c4, code)
        if not result.report.ok:
            # guided stages check every condition, so this means an internal inconsistency
            logger.error("synthesized quadruple for %s fails verification", code.name)
    logger.info(
        "quadruple for %s: %d CNOTs, protocol CNOT depth %d", code.name, result.total_cnots, result.cnot_depth
    )
    return result
