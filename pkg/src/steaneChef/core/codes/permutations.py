"""Qubit permutations: automorphism checks, repairing a printed permutation, relabeling circuits."""

from typing import List, Optional, Sequence, Tuple

from steaneChef.core.circuit.prep_circuit import PrepCircuit
from steaneChef.core.codes.css_code import CssCode
from steaneChef.utils.errors import ContractViolation


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ContractViolation(f"not a permutation of {n} qubits: {list(perm)}")


def is_bijection(perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(len(perm)))


def compose(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """Apply ``first`` then ``second``."""
    return tuple(second[first[i]] for i in range(len(first)))


def order(perm: Sequence[int]) -> int:
    power = tuple(perm)
    identity = tuple(range(len(perm)))
    k = 1
    while power != identity:
        power = compose(power, perm)
        k += 1
    return k


def is_automorphism(code: CssCode, perm: Sequence[int]) -> bool:
    """True iff relabeling qubit ``q`` as ``perm[q]`` preserves both stabilizer groups."""
    _check_permutation(perm, code.n)
    return (
        code.h_x.permute_columns(perm).row_space == code.x_space
        and code.h_z.permute_columns(perm).row_space == code.z_space
    )


def find_rotation_fix(
    printed: Sequence[int], code: Optional[CssCode] = None, expected_order: Optional[int] = None
) -> List[Tuple[int, ...]]:
    """
    Single-entry corrections that turn a non-bijective map into a valid permutation.

    Every position holding a repeated image is tried with every missing value. A candidate
    survives if it has ``expected_order`` (when given) and is an automorphism of ``code``
    (when given).
    """
    printed = list(printed)
    n = len(printed)
    if is_bijection(printed):
        candidates = [tuple(printed)]
    else:
        missing = sorted(set(range(n)) - set(printed))
        repeated = [i for i, v in enumerate(printed) if printed.count(v) > 1]
        candidates = []
        for i in repeated:
            for v in missing:
                trial = list(printed)
                trial[i] = v
                if is_bijection(trial):
                    candidates.append(tuple(trial))
    if expected_order is not None:
        candidates = [c for c in candidates if order(c) == expected_order]
    if code is not None:
        candidates = [c for c in candidates if is_automorphism(code, c)]
    return candidates


def permute_circuit(circuit: PrepCircuit, perm: Sequence[int]) -> PrepCircuit:
    """Relabel qubit ``q`` as ``perm[q]`` in inits and gates."""
    _check_permutation(perm, circuit.n)
    init = [None] * circuit.n
    for q, basis in enumerate(circuit.init):
        init[perm[q]] = basis
    gates = [(perm[c], perm[t]) for c, t in circuit.gates]
    return PrepCircuit(circuit.n, init, gates)
