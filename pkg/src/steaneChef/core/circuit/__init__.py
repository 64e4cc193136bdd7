"""CNOT preparation circuits and their text format."""

from steaneChef.core.circuit.circuit_io import parse_circuit, serialize_circuit
from steaneChef.core.circuit.prep_circuit import (
    PLUS,
    ZERO,
    PrepCircuit,
    depth,
    layers,
    stabilizer_matrices,
    verify_prepares,
)

__all__ = [
    "PLUS",
    "ZERO",
    "PrepCircuit",
    "depth",
    "layers",
    "parse_circuit",
    "serialize_circuit",
    "stabilizer_matrices",
    "verify_prepares",
]
