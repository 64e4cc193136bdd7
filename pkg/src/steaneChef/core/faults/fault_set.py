"""
Propagated fault sets and stabilizer-coset weights.

A single X (Z) fault seeded on qubit ``q`` just before gate ``j`` of a preparation
circuit leaves the circuit as the X (Z) error obtained by conjugating through gates
``j..end``: X spreads from control to target, Z from target to control. The fault set
of a circuit is the set of all such errors plus the bare single-qubit errors.

Errors of the prepared |0...0>_L are compared modulo the stabilizers of that state:
``rowspace(h_x)`` for X errors and ``rowspace(h_z)`` extended by the logical Z
operators for Z errors.
"""

import itertools
import logging
import threading
import weakref
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from steaneChef.config.config import Config
from steaneChef.core.circuit.prep_circuit import PrepCircuit
from steaneChef.core.codes.css_code import X, Z, CssCode, check_basis
from steaneChef.core.gf2 import BitVector, RowSpace
from steaneChef.utils.errors import CapExceededError, ContractViolation

logger = logging.getLogger(__name__)

Provenance = Tuple[int, int]


@dataclass(frozen=True)
class PauliError:
    """An X- or Z-type Pauli error given by its support."""

    basis: str
    support: BitVector

    def __post_init__(self):
        check_basis(self.basis)

    @classmethod
    def from_bits(cls, basis: str, n: int, bits: int) -> "PauliError":
        return cls(basis, BitVector(n, bits))

    @classmethod
    def from_support(cls, basis: str, n: int, qubits: Iterable[int]) -> "PauliError":
        return cls(basis, BitVector.from_support(n, qubits))

    @property
    def n(self) -> int:
        return self.support.length

    @property
    def bits(self) -> int:
        return self.support.bits

    @property
    def weight(self) -> int:
        return self.support.weight

    def __mul__(self, other: "PauliError") -> "PauliError":
        if self.basis != other.basis:
            raise ContractViolation("cannot multiply X and Z errors into a single-basis error")
        return PauliError(self.basis, self.support ^ other.support)

    def __str__(self) -> str:
        qubits = self.support.support()
        return "".join(f"{self.basis}{q}" for q in qubits) if qubits else "I"


class FaultSet:
    """
    Deduplicated supports of one basis, in order of first insertion.

    Provenance maps each support to the ``(gate position, qubit)`` of its first seed;
    bare single-qubit errors that were not seeded by a gate carry ``None``.
    """

    def __init__(self, basis: str, n: int, errors: Iterable[int] = (), include_singles: bool = True):
        self.basis = check_basis(basis)
        self.n = n
        self._errors: Dict[int, Optional[Provenance]] = {}
        if include_singles:
            for q in range(n):
                self._errors[1 << q] = None
        for bits in errors:
            self.add(bits)

    @classmethod
    def singles(cls, basis: str, n: int) -> "FaultSet":
        return cls(basis, n)

    def add(self, bits: int, provenance: Optional[Provenance] = None) -> bool:
        """Insert a support; returns ``True`` if it was new."""
        if bits < 0 or bits >> self.n:
            raise ContractViolation(f"support beyond {self.n} qubits")
        if bits in self._errors:
            return False
        self._errors[bits] = provenance
        return True

    def union(self, other: "FaultSet") -> "FaultSet":
        if other.basis != self.basis or other.n != self.n:
            raise ContractViolation("fault sets differ in basis or size")
        out = self.copy()
        for bits, prov in other._errors.items():
            if bits not in out._errors:
                out._errors[bits] = prov
        return out

    def copy(self) -> "FaultSet":
        out = FaultSet(self.basis, self.n, include_singles=False)
        out._errors = dict(self._errors)
        return out

    def supports(self) -> List[int]:
        return list(self._errors)

    @property
    def errors(self) -> List[PauliError]:
        return [PauliError.from_bits(self.basis, self.n, b) for b in self._errors]

    @property
    def provenance(self) -> Dict[int, Optional[Provenance]]:
        return dict(self._errors)

    def __contains__(self, item) -> bool:
        bits = item.bits if isinstance(item, (PauliError, BitVector)) else item
        return bits in self._errors

    def __iter__(self) -> Iterator[int]:
        return iter(self._errors)

    def __len__(self) -> int:
        return len(self._errors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaultSet):
            return NotImplemented
        return self.basis == other.basis and self.n == other.n and set(self._errors) == set(other._errors)

    def __repr__(self) -> str:
        return f"FaultSet({self.basis}, n={self.n}, size={len(self)})"


def propagate(c: PrepCircuit, basis: str, seed_qubit: int, after_gate: int) -> PauliError:
    """
    Conjugate a single-qubit error through gates ``after_gate..end``.

    Raises:
        ContractViolation: If the qubit or gate position is out of range.
    """
    check_basis(basis)
    if not 0 <= seed_qubit < c.n:
        raise ContractViolation(f"qubit {seed_qubit} out of range for {c.n} qubits")
    if not 0 <= after_gate <= c.cnot_count:
        raise ContractViolation(f"gate position {after_gate} out of range 0..{c.cnot_count}")
    return PauliError.from_bits(basis, c.n, propagate_bits(c.gates[after_gate:], basis, 1 << seed_qubit))


def propagate_bits(gates: Iterable[Tuple[int, int]], basis: str, bits: int) -> int:
    """Push an arbitrary support through ``gates``."""
    for ctrl, tgt in gates:
        if basis == X:
            if (bits >> ctrl) & 1:
                bits ^= 1 << tgt
        elif (bits >> tgt) & 1:
            bits ^= 1 << ctrl
    return bits


def suffix_propagators(n: int) -> List[int]:
    """Propagation vectors of an empty suffix: qubit ``q`` maps to ``e_q``."""
    return [1 << q for q in range(n)]


def prepend_gate(propagators: List[int], basis: str, ctrl: int, tgt: int) -> int:
    """
    Update suffix propagators in place for a gate placed in front of the suffix.

    Returns the one propagated error that is new: the image of an error on the
    control (X) or target (Z) seeded just before the new gate.
    """
    if basis == X:
        propagators[ctrl] ^= propagators[tgt]
        return propagators[ctrl]
    propagators[tgt] ^= propagators[ctrl]
    return propagators[tgt]


def fault_set(c: PrepCircuit, basis: str) -> FaultSet:
    """All propagated single-fault errors of ``c`` plus the bare single-qubit errors."""
    check_basis(basis)
    out = FaultSet.singles(basis, c.n)
    props = suffix_propagators(c.n)
    for position in range(c.cnot_count - 1, -1, -1):
        ctrl, tgt = c.gates[position]
        bits = prepend_gate(props, basis, ctrl, tgt)
        out.add(bits, (position, ctrl if basis == X else tgt))
    return out


def state_stabilizers(code: CssCode, basis: str) -> RowSpace:
    """
    Errors of ``basis`` type that act trivially on the prepared logical zero state.

    X errors reduce modulo ``rowspace(h_x)``; Z errors modulo ``rowspace(h_z)`` plus the
    logical Z operators, which fix |0>_L.
    """
    if check_basis(basis) == X:
        return code.x_space
    return _z_state_space(code)


_Z_SPACES: "weakref.WeakKeyDictionary[CssCode, RowSpace]" = weakref.WeakKeyDictionary()


def _z_state_space(code: CssCode) -> RowSpace:
    space = _Z_SPACES.get(code)
    if space is None:
        space = code.z_space.extended(code.logicals_z.row_ints())
        _Z_SPACES[code] = space
    return space


class CosetTable:
    """
    Minimal weights of low-weight cosets.

    Maps the canonical representative of every coset that contains a vector of weight
    ``<= built_weight`` to the smallest such weight. Grows on demand.
    """

    def __init__(self, code: CssCode, basis: str):
        self.code = code
        self.basis = check_basis(basis)
        self.space = state_stabilizers(code, basis)
        self.built_weight = -1
        self._weights: Dict[int, int] = {}
        self._lock = threading.Lock()
        self.logger = logging.getLogger(__name__)

    def ensure(self, weight: int) -> None:
        if weight <= self.built_weight:
            return
        with self._lock:
            for w in range(self.built_weight + 1, weight + 1):
                for support in itertools.combinations(range(self.code.n), w):
                    bits = 0
                    for q in support:
                        bits |= 1 << q
                    self._weights.setdefault(self.space.canonical(bits), w)
                self.built_weight = w
            self.logger.debug(
                "coset table %s/%s built to weight %d (%d cosets)",
                self.code.name, self.basis, self.built_weight, len(self._weights),
            )

    def leq(self, bits: int, t: int) -> bool:
        """True iff the coset of ``bits`` holds a vector of weight ``<= t``."""
        if t < 0:
            return False
        self.ensure(t)
        w = self._weights.get(self.space.canonical(bits))
        return w is not None and w <= t

    def min_weight(self, bits: int, cap: int) -> Optional[int]:
        self.ensure(cap)
        w = self._weights.get(self.space.canonical(bits))
        return w if w is not None and w <= cap else None

    def leq_canonical(self, key: int, t: int) -> bool:
        """Like :meth:`leq` for an already canonical representative."""
        if t < 0:
            return False
        self.ensure(t)
        w = self._weights.get(key)
        return w is not None and w <= t

    def min_weight_canonical(self, key: int) -> Optional[int]:
        """Smallest weight recorded so far for the coset ``key``."""
        return self._weights.get(key)

    def canonical(self, bits: int) -> int:
        return self.space.canonical(bits)


_TABLES: "weakref.WeakKeyDictionary[CssCode, Dict[str, CosetTable]]" = weakref.WeakKeyDictionary()
_TABLES_LOCK = threading.Lock()


def coset_table(code: CssCode, basis: str) -> CosetTable:
    """Shared table for ``(code, basis)``."""
    with _TABLES_LOCK:
        per_code = _TABLES.setdefault(code, {})
        table = per_code.get(basis)
        if table is None:
            table = per_code[basis] = CosetTable(code, basis)
    return table


def _check_weight_cap(t: int) -> None:
    cap = Config().weight_cap
    if t > cap:
        raise CapExceededError("weight bound", t, cap)


def weight_leq(e: PauliError, t: int, code: CssCode) -> bool:
    """
    True iff ``e`` is equivalent to an error of weight at most ``t``.
    Z errors are reduced modulo ``h_z`` plus the logical Z operators.

    Raises:
        CapExceededError: If ``t`` exceeds the configured weight cap.
    """
    _check_weight_cap(t)
    if e.n != code.n:
        raise ContractViolation(f"error on {e.n} qubits for a code on {code.n}")
    return coset_table(code, e.basis).leq(e.bits, t)


def min_weight_upto(e: PauliError, cap: int, code: CssCode) -> Optional[int]:
    """Minimal weight of ``e`` modulo stabilizers if it is ``<= cap``, else ``None``."""
    _check_weight_cap(cap)
    return coset_table(code, e.basis).min_weight(e.bits, cap)


def equivalent(e1: PauliError, e2: PauliError, code: CssCode) -> bool:
    """True iff ``e1`` and ``e2`` differ by a stabilizer of the prepared state."""
    if e1.basis != e2.basis:
        raise ContractViolation("cannot compare X and Z errors")
    if e1.n != e2.n:
        raise ContractViolation(f"length mismatch: {e1.n} vs {e2.n}")
    return state_stabilizers(code, e1.basis).contains(e1.bits ^ e2.bits)
