"""
Circuit text format.

::

    # comment
    QUBITS 7
    INIT 0 P
    INIT 1 Z
    ...
    CX 0 3

``INIT`` lines must cover every qubit exactly once; ``CX`` lines are in temporal order.
"""

from typing import Iterable, List, Optional, Tuple, Type

from steaneChef.core.circuit.prep_circuit import PLUS, ZERO, PrepCircuit
from steaneChef.utils.errors import CircuitParseError, _LineError

NumberedLine = Tuple[int, str]


def numbered_lines(text: str) -> List[NumberedLine]:
    """Non-empty lines with comments stripped, keeping 1-based line numbers."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _int(token: str, number: int, error: Type[_LineError]) -> int:
    try:
        value = int(token)
    except ValueError:
        raise error(f"expected an integer, got {token!r}", number) from None
    if value < 0:
        raise error(f"negative index {value}", number)
    return value


def parse_circuit_lines(
    lines: Iterable[NumberedLine], error: Type[_LineError] = CircuitParseError
) -> PrepCircuit:
    """Parse already-numbered lines; shared with the protocol format."""
    n: Optional[int] = None
    init: List[Optional[str]] = []
    gates = []
    last = 0
    for number, line in lines:
        last = number
        parts = line.split()
        op = parts[0].upper()
        if op == "QUBITS":
            if n is not None:
                raise error("QUBITS given twice", number)
            if len(parts) != 2:
                raise error("QUBITS takes one argument", number)
            n = _int(parts[1], number, error)
            init = [None] * n
            continue
        if n is None:
            raise error(f"{op} before the QUBITS header", number)
        if op == "INIT":
            if len(parts) != 3:
                raise error("INIT takes a qubit and a basis", number)
            q = _int(parts[1], number, error)
            basis = parts[2].upper()
            if q >= n:
                raise error(f"qubit {q} out of range for {n} qubits", number)
            if basis not in (ZERO, PLUS):
                raise error(f"unknown basis {parts[2]!r}; use Z or P", number)
            if init[q] is not None:
                raise error(f"qubit {q} initialized twice", number)
            init[q] = basis
        elif op == "CX":
            if len(parts) != 3:
                raise error("CX takes a control and a target", number)
            c = _int(parts[1], number, error)
            t = _int(parts[2], number, error)
            if c >= n or t >= n:
                raise error(f"CX {c} {t}: index out of range for {n} qubits", number)
            if c == t:
                raise error(f"CX {c} {t}: control equals target", number)
            gates.append((c, t))
        else:
            raise error(f"unknown opcode {parts[0]!r}", number)
    if n is None:
        raise error("missing QUBITS header", last + 1 if last else None)
    missing = [q for q, b in enumerate(init) if b is None]
    if missing:
        raise error(f"no INIT for qubits {missing}", last + 1)
    return PrepCircuit(n, init, gates)


def parse_circuit(text: str) -> PrepCircuit:
    """
    Parse the circuit text format.

    Raises:
        CircuitParseError: With the offending line number.
    """
    return parse_circuit_lines(numbered_lines(text))


def circuit_lines(c: PrepCircuit) -> List[str]:
    lines = [f"QUBITS {c.n}"]
    lines.extend(f"INIT {q} {basis}" for q, basis in enumerate(c.init))
    lines.extend(f"CX {ctrl} {tgt}" for ctrl, tgt in c.gates)
    return lines


def serialize_circuit(c: PrepCircuit, title: Optional[str] = None) -> str:
    lines = [f"# {title}"] if title else []
    lines.extend(circuit_lines(c))
    return "\n".join(lines) + "\n"


# Alias matching the operation name used in reports.
serialize = serialize_circuit
