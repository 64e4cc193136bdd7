"""
Unitary CNOT preparation circuits.

A :class:`PrepCircuit` is a list of single-qubit initializations (``Z`` for |0>, ``P``
for |+>) followed by an ordered list of CNOTs. The gate list is the only source of
order; layers are always derived from it by as-soon-as-possible scheduling.
"""

import logging
from typing import TYPE_CHECKING, Iterable, List, Sequence, Tuple

from steaneChef.core.gf2 import BitMatrix, RowSpace
from steaneChef.utils.errors import ContractViolation

if TYPE_CHECKING:
    from steaneChef.core.codes.css_code import CssCode

logger = logging.getLogger(__name__)

ZERO = "Z"
PLUS = "P"
Gate = Tuple[int, int]


class PrepCircuit:
    """
    Qubit initializations plus an ordered CNOT list.

    Attributes:
        n (int): Number of qubits.
        init (tuple[str, ...]): ``"Z"`` or ``"P"`` per qubit.
        gates (tuple[tuple[int, int], ...]): ``(control, target)`` pairs in temporal order.
    """

    __slots__ = ("n", "init", "gates", "_layer_of")

    def __init__(self, n: int, init: Sequence[str], gates: Iterable[Gate] = ()):
        if n < 0:
            raise ContractViolation(f"negative qubit count {n}")
        init = tuple(init)
        if len(init) != n:
            raise ContractViolation(f"{len(init)} initializations for {n} qubits")
        for q, basis in enumerate(init):
            if basis not in (ZERO, PLUS):
                raise ContractViolation(f"qubit {q} has unknown init basis {basis!r}")
        checked = []
        for c, t in gates:
            c, t = int(c), int(t)
            if not (0 <= c < n and 0 <= t < n):
                raise ContractViolation(f"gate CX({c},{t}) out of range for {n} qubits")
            if c == t:
                raise ContractViolation(f"gate CX({c},{t}): control equals target")
            checked.append((c, t))
        self.n = n
        self.init = init
        self.gates: Tuple[Gate, ...] = tuple(checked)
        self._layer_of = None

    @classmethod
    def from_plus_qubits(cls, n: int, plus: Iterable[int], gates: Iterable[Gate] = ()) -> "PrepCircuit":
        plus = set(plus)
        return cls(n, [PLUS if q in plus else ZERO for q in range(n)], gates)

    @classmethod
    def from_code_product_state(cls, code: "CssCode", plus: Iterable[int], gates: Iterable[Gate] = ()) -> "PrepCircuit":
        """Like :meth:`from_plus_qubits`, but the Plus count must equal ``m_X``."""
        circuit = cls.from_plus_qubits(code.n, plus, gates)
        circuit.check_init_counts(code)
        return circuit

    def check_init_counts(self, code: "CssCode") -> None:
        if self.n != code.n:
            raise ContractViolation(f"circuit has {self.n} qubits, code has {code.n}")
        if len(self.plus_qubits) != code.m_x:
            raise ContractViolation(
                f"{len(self.plus_qubits)} qubits start in |+>, the code needs {code.m_x}"
            )

    @property
    def plus_qubits(self) -> List[int]:
        return [q for q, b in enumerate(self.init) if b == PLUS]

    @property
    def zero_qubits(self) -> List[int]:
        return [q for q, b in enumerate(self.init) if b == ZERO]

    @property
    def cnot_count(self) -> int:
        return len(self.gates)

    def layer_indices(self) -> List[int]:
        """ASAP layer of every gate."""
        if self._layer_of is None:
            ready = [0] * self.n
            out = []
            for c, t in self.gates:
                layer = max(ready[c], ready[t])
                out.append(layer)
                ready[c] = ready[t] = layer + 1
            self._layer_of = tuple(out)
        return list(self._layer_of)

    def layers(self) -> List[List[Gate]]:
        """Gates grouped by ASAP layer, keeping list order inside each layer."""
        out: List[List[Gate]] = []
        for gate, layer in zip(self.gates, self.layer_indices()):
            while len(out) <= layer:
                out.append([])
            out[layer].append(gate)
        return out

    def depth(self) -> int:
        """Number of CNOT layers."""
        return max(self.layer_indices(), default=-1) + 1

    def full_depth(self) -> int:
        """CNOT layers plus one initialization layer."""
        return self.depth() + (1 if self.n else 0)

    def without_gate(self, index: int) -> "PrepCircuit":
        if not 0 <= index < len(self.gates):
            raise ContractViolation(f"gate index {index} out of range")
        gates = self.gates[:index] + self.gates[index + 1:]
        return PrepCircuit(self.n, self.init, gates)

    def with_gate(self, index: int, gate: Gate) -> "PrepCircuit":
        """Insert ``gate`` so that it ends up at position ``index``."""
        if not 0 <= index <= len(self.gates):
            raise ContractViolation(f"insert position {index} out of range")
        gates = self.gates[:index] + (tuple(gate),) + self.gates[index:]
        return PrepCircuit(self.n, self.init, gates)

    def index_of(self, gate: Gate) -> int:
        try:
            return self.gates.index(tuple(gate))
        except ValueError:
            raise ContractViolation(f"gate CX{tuple(gate)} not in circuit") from None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "init": "".join(self.init),
            "gates": [list(g) for g in self.gates],
            "cnot_count": self.cnot_count,
            "depth": self.depth(),
            "full_depth": self.full_depth(),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrepCircuit):
            return NotImplemented
        return self.n == other.n and self.init == other.init and self.gates == other.gates

    def __hash__(self) -> int:
        return hash((self.n, self.init, self.gates))

    def __repr__(self) -> str:
        return f"PrepCircuit(n={self.n}, cnots={self.cnot_count}, depth={self.depth()})"


def depth(c: PrepCircuit) -> int:
    return c.depth()


def layers(c: PrepCircuit) -> List[List[Gate]]:
    return c.layers()


def stabilizer_matrices(c: PrepCircuit) -> Tuple[BitMatrix, BitMatrix]:
    """
    Run the circuit on the product-state check matrices.

    X rows start as one unit row per Plus qubit, Z rows as one per Zero qubit. A CNOT
    ``(i, j)`` adds column ``i`` to column ``j`` of the X matrix and column ``j`` to
    column ``i`` of the Z matrix.
    """
    x_mat = BitMatrix.from_ints(c.n, [1 << q for q in c.plus_qubits])
    z_mat = BitMatrix.from_ints(c.n, [1 << q for q in c.zero_qubits])
    for i, j in c.gates:
        if x_mat.rows:
            x_mat = x_mat.col_add(i, j)
        if z_mat.rows:
            z_mat = z_mat.col_add(j, i)
    return x_mat, z_mat


def verify_prepares(c: PrepCircuit, code: "CssCode") -> bool:
    """
    True iff ``c`` prepares the logical |0...0> of ``code``.

    The final X rows must span ``rowspace(h_x)``; the final Z rows must span
    ``rowspace(h_z)`` extended by the logical Z operators.
    """
    if c.n != code.n:
        raise ContractViolation(f"circuit has {c.n} qubits, code has {code.n}")
    if len(c.plus_qubits) != code.m_x:
        logger.debug("init mismatch: %d Plus qubits for m_x=%d", len(c.plus_qubits), code.m_x)
        return False
    x_mat, z_mat = stabilizer_matrices(c)
    if x_mat.row_space != code.x_space:
        return False
    target = code.z_space.extended(code.logicals_z.row_ints())
    return RowSpace(c.n, z_mat.row_ints()) == target
