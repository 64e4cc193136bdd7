"""
Strict fault tolerance of single circuits and the three-condition quadruple check.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from steaneChef.core.circuit.prep_circuit import PrepCircuit, verify_prepares
from steaneChef.core.codes.css_code import X, Z, CssCode, check_basis
from steaneChef.core.faults.fault_set import PauliError, coset_table, fault_set
from steaneChef.core.ftcheck.distinctness import DistinctnessWitness, check_distinct_cap, find_witness
from steaneChef.utils.errors import VerificationError

logger = logging.getLogger(__name__)

# (condition number, basis, left circuit indices, right circuit indices), 0-based
CONDITIONS = (
    (1, X, (0,), (1,)),
    (2, X, (2,), (3,)),
    (3, Z, (0, 1), (2, 3)),
)


@dataclass
class StrictnessWitness:
    """Fault combination of ``len(errors)`` faults whose product is too heavy. Falsy."""

    errors: List[PauliError]
    min_weight: Optional[int] = None

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, object]:
        return {
            "basis": self.errors[0].basis,
            "errors": [e.support.support() for e in self.errors],
            "min_weight": self.min_weight,
        }


def is_strictly_ft(c: PrepCircuit, code: CssCode, basis: str) -> Union[bool, StrictnessWitness]:
    """
    Check that no combination of ``s <= t`` propagated faults has weight above ``s``
    modulo the stabilizers of the prepared state, where ``t = (d - 1) // 2``.

    Returns:
        ``True``, or the first violating combination by increasing size.
    """
    check_basis(basis)
    t = code.t
    if t == 0:
        return True
    check_distinct_cap(t)
    table = coset_table(code, basis)
    table.ensure(t)
    supports = fault_set(c, basis).supports()
    canon = [table.canonical(b) for b in supports]
    for s in range(1, t + 1):
        for idx in itertools.combinations(range(len(canon)), s):
            key = 0
            for i in idx:
                key ^= canon[i]
            if not table.leq_canonical(key, s):
                return StrictnessWitness(
                    [PauliError.from_bits(basis, c.n, supports[i]) for i in idx],
                    table.min_weight_canonical(key),
                )
    return True


@dataclass
class ConditionResult:
    number: int
    basis: str
    passed: bool
    witness: Optional[DistinctnessWitness] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "condition": self.number,
            "basis": self.basis,
            "passed": self.passed,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


@dataclass
class VerificationReport:
    """Outcome of :func:`verify_quadruple`; truthy iff all three conditions hold."""

    code: str
    t: int
    prepares: List[bool]
    conditions: List[ConditionResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.prepares) and all(c.passed for c in self.conditions)

    @property
    def witnesses(self) -> List[DistinctnessWitness]:
        return [c.witness for c in self.conditions if c.witness is not None]

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> Dict[str, object]:
        return {
            "code": self.code,
            "t": self.t,
            "prepares": list(self.prepares),
            "conditions": [c.to_dict() for c in self.conditions],
            "ok": self.ok,
        }


def _union(circuits: Sequence[PrepCircuit], indices, basis: str):
    out = fault_set(circuits[indices[0]], basis)
    for i in indices[1:]:
        out = out.union(fault_set(circuits[i], basis))
    return out


def check_prepares(circuits: Sequence[PrepCircuit], code: CssCode) -> List[bool]:
    return [verify_prepares(c, code) for c in circuits]


def verify_quadruple(
    c1: PrepCircuit, c2: PrepCircuit, c3: PrepCircuit, c4: PrepCircuit, code: CssCode
) -> VerificationReport:
    """
    Evaluate the three distinctness conditions at ``t = (d - 1) // 2``:

    1. ``E_X(C1)`` against ``E_X(C2)``
    2. ``E_X(C3)`` against ``E_X(C4)``
    3. ``E_Z(C1) | E_Z(C2)`` against ``E_Z(C3) | E_Z(C4)``

    Raises:
        VerificationError: If any circuit does not prepare the code's |0>_L; its
            ``failing`` attribute lists the 1-based circuit numbers.
    """
    circuits = [c1, c2, c3, c4]
    prepares = check_prepares(circuits, code)
    if not all(prepares):
        failing = [i + 1 for i, ok in enumerate(prepares) if not ok]
        raise VerificationError(
            f"circuits {', '.join(f'C{i}' for i in failing)} do not prepare |0>_L of {code.name}",
            failing,
        )
    t = code.t
    report = VerificationReport(code.name, t, prepares)
    for number, basis, left, right in CONDITIONS:
        witness = None
        if t > 0:
            witness = find_witness(_union(circuits, left, basis), _union(circuits, right, basis), t, code)
        if witness is not None:
            witness.condition = number
        report.conditions.append(ConditionResult(number, basis, witness is None, witness))
        logger.info("condition %d (%s): %s", number, basis, "pass" if witness is None else "FAIL")
    return report
