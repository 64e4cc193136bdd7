"""
Lookup-table decoding.

Errors are enumerated by increasing weight and the first error seen for each syndrome
becomes its correction. Syndromes still missing once the weight reaches the code
distance are heralded: hitting one counts as a logical failure.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Set

import numpy as np

from steaneChef.core.codes.css_code import CssCode, check_basis, opposite
from steaneChef.utils.errors import CapExceededError, ContractViolation

logger = logging.getLogger(__name__)

MAX_LUT_QUBITS = 40
MAX_LUT_DISTANCE = 7
# dense numpy tables up to this many checks
MAX_DENSE_CHECKS = 22


@dataclass
class LutDecoder:
    """
    Syndrome to correction table for errors of one Pauli type.

    Attributes:
        basis: Pauli type of the corrected errors; syndromes come from the opposite checks.
        n: Block length.
        table: Syndrome (bit ``i`` is check ``i``) to correction support.
        heralded: Syndromes without a correction.
    """

    basis: str
    n: int
    num_checks: int
    table: Dict[int, int] = field(default_factory=dict)
    heralded: Set[int] = field(default_factory=set)
    max_weight: int = 0

    def __post_init__(self):
        self._dense: Optional[np.ndarray] = None
        self._dense_heralded: Optional[np.ndarray] = None

    def decode(self, syndrome: int) -> Optional[int]:
        """Correction support for ``syndrome``, or ``None`` if it is heralded."""
        if syndrome >> self.num_checks:
            raise ContractViolation(f"syndrome {syndrome} has more than {self.num_checks} bits")
        return self.table.get(syndrome)

    def _build_dense(self) -> None:
        size = 1 << self.num_checks
        corrections = np.zeros((size, self.n), dtype=bool)
        heralded = np.ones(size, dtype=bool)
        for syndrome, correction in self.table.items():
            heralded[syndrome] = False
            for q in range(self.n):
                if (correction >> q) & 1:
                    corrections[syndrome, q] = True
        self._dense = corrections
        self._dense_heralded = heralded

    def decode_batch(self, syndromes: np.ndarray):
        """
        Vectorized :meth:`decode`.

        Args:
            syndromes: Integer syndromes, one per shot.

        Returns:
            ``(corrections, heralded)``: an ``(n, shots)`` bool array and a per-shot
            bool array.
        """
        syndromes = np.asarray(syndromes, dtype=np.int64)
        if self.num_checks <= MAX_DENSE_CHECKS:
            if self._dense is None:
                self._build_dense()
            return self._dense[syndromes].T, self._dense_heralded[syndromes]
        corrections = np.zeros((self.n, len(syndromes)), dtype=bool)
        heralded = np.zeros(len(syndromes), dtype=bool)
        for shot, s in enumerate(syndromes.tolist()):
            c = self.table.get(s)
            if c is None:
                heralded[shot] = True
                continue
            for q in range(self.n):
                corrections[q, shot] = (c >> q) & 1
        return corrections, heralded

    def __len__(self) -> int:
        return len(self.table)


def build_lut(code: CssCode, basis: str) -> LutDecoder:
    """
    Build the decoder for ``basis`` errors of ``code``.

    Errors up to weight ``(d - 1) // 2`` are always enumerated; the search continues
    weight by weight up to ``d`` until every syndrome has a correction.

    Raises:
        CapExceededError: If the code is longer than 40 qubits or its distance exceeds 7.
    """
    check_basis(basis)
    if code.n > MAX_LUT_QUBITS:
        raise CapExceededError("decoder block length", code.n, MAX_LUT_QUBITS)
    d = code.d
    if d is None:
        raise ContractViolation(f"distance of {code.name} is unknown")
    if d > MAX_LUT_DISTANCE:
        raise CapExceededError("decoder distance", d, MAX_LUT_DISTANCE)

    checks = code.checks(opposite(basis))
    decoder = LutDecoder(basis, code.n, checks.rows)
    reachable = 1 << checks.rank()
    t = (d - 1) // 2
    for w in range(0, d + 1):
        if w > t and len(decoder.table) >= reachable:
            break
        for support in itertools.combinations(range(code.n), w):
            bits = 0
            for q in support:
                bits |= 1 << q
            decoder.table.setdefault(checks.syndrome_int(bits), bits)
        decoder.max_weight = w

    if checks.rows <= MAX_DENSE_CHECKS:
        decoder.heralded = {s for s in range(1 << checks.rows) if s not in decoder.table}
    if decoder.heralded:
        logger.warning(
            "%s decoder for %s: %d syndrome(s) heralded", basis, code.name, len(decoder.heralded)
        )
    logger.debug(
        "%s decoder for %s: %d syndromes up to weight %d", basis, code.name, len(decoder.table), decoder.max_weight
    )
    return decoder
