"""Propagated single-fault sets and stabilizer-coset weight queries."""

from steaneChef.core.faults.fault_set import (
    CosetTable,
    FaultSet,
    PauliError,
    coset_table,
    equivalent,
    fault_set,
    min_weight_upto,
    prepend_gate,
    propagate,
    propagate_bits,
    state_stabilizers,
    suffix_propagators,
    weight_leq,
)

__all__ = [
    "CosetTable",
    "FaultSet",
    "PauliError",
    "coset_table",
    "equivalent",
    "fault_set",
    "min_weight_upto",
    "prepend_gate",
    "propagate",
    "propagate_bits",
    "state_stabilizers",
    "suffix_propagators",
    "weight_leq",
]
