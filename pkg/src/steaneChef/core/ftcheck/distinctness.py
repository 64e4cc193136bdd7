"""
t-distinctness of fault sets.

Two fault sets E1, E2 are t-distinct when every pair of subsets F1 of E1 and F2 of E2
with ``|F1| + |F2| <= t`` whose products are equivalent has a product of minimal
weight at most ``|F1| + |F2|``. Products are compared by canonical coset
representative, which is linear, so subset products are XORs of precomputed
representatives and equivalence is a hash lookup.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from steaneChef.config.config import Config
from steaneChef.core.codes.css_code import CssCode
from steaneChef.core.faults.fault_set import CosetTable, FaultSet, PauliError, coset_table
from steaneChef.utils.errors import CapExceededError, ContractViolation

logger = logging.getLogger(__name__)


@dataclass
class DistinctnessWitness:
    """
    Certificate that two fault sets are not t-distinct.

    A witness is falsy, so ``if is_t_distinct(...)`` reads naturally.
    """

    subset_1: List[PauliError]
    subset_2: List[PauliError]
    combined_weight_bound: int
    t: int
    condition: Optional[int] = None
    min_weight: Optional[int] = None

    def __bool__(self) -> bool:
        return False

    @property
    def product(self) -> PauliError:
        out = self.subset_1[0]
        for e in self.subset_1[1:]:
            out = out * e
        return out

    def to_dict(self) -> Dict[str, object]:
        return {
            "condition": self.condition,
            "basis": self.subset_1[0].basis,
            "subset_1": [e.support.support() for e in self.subset_1],
            "subset_2": [e.support.support() for e in self.subset_2],
            "combined_weight_bound": self.combined_weight_bound,
            "min_weight": self.min_weight,
            "t": self.t,
        }


def check_distinct_cap(t: int) -> None:
    if t < 1:
        raise ContractViolation(f"t must be at least 1, got {t}")
    cap = Config().distinct_cap
    if t > cap:
        raise CapExceededError("distinctness t", t, cap)


def _subset_products(canon: Sequence[int], size: int) -> Iterable[Tuple[Tuple[int, ...], int]]:
    for idx in itertools.combinations(range(len(canon)), size):
        key = 0
        for i in idx:
            key ^= canon[i]
        yield idx, key


def _first_products(canon: Sequence[int], size: int) -> Dict[int, Tuple[int, ...]]:
    out: Dict[int, Tuple[int, ...]] = {}
    for idx, key in _subset_products(canon, size):
        out.setdefault(key, idx)
    return out


def find_witness(e1: FaultSet, e2: FaultSet, t: int, code: CssCode) -> Optional[DistinctnessWitness]:
    """First violating subset pair by increasing ``|F1| + |F2|``, or ``None``."""
    if e1.basis != e2.basis:
        raise ContractViolation("fault sets must share a basis")
    check_distinct_cap(t)
    table = coset_table(code, e1.basis)
    table.ensure(t)
    sup1, sup2 = e1.supports(), e2.supports()
    canon1 = [table.canonical(b) for b in sup1]
    canon2 = [table.canonical(b) for b in sup2]
    for s in range(2, t + 1):
        for a in range(1, s):
            b = s - a
            right = None
            for idx, key in _subset_products(canon1, a):
                if table.leq_canonical(key, s):
                    continue
                if right is None:
                    right = _first_products(canon2, b)
                match = right.get(key)
                if match is not None:
                    return DistinctnessWitness(
                        subset_1=[PauliError.from_bits(e1.basis, e1.n, sup1[i]) for i in idx],
                        subset_2=[PauliError.from_bits(e2.basis, e2.n, sup2[i]) for i in match],
                        combined_weight_bound=s,
                        t=t,
                        min_weight=table.min_weight_canonical(key),
                    )
    return None


def is_t_distinct(e1: FaultSet, e2: FaultSet, t: int, code: CssCode) -> Union[bool, DistinctnessWitness]:
    """
    Check t-distinctness of two fault sets of the same basis.

    Returns:
        ``True``, or the first :class:`DistinctnessWitness` found.

    Raises:
        CapExceededError: If ``t`` exceeds the configured distinctness cap.
    """
    witness = find_witness(e1, e2, t, code)
    return True if witness is None else witness


class ReferenceIndex:
    """
    Canonical subset products of a fixed reference fault set, by subset size.

    Built once per reference and queried for every tentative error during guided
    synthesis.
    """

    def __init__(self, ref: FaultSet, t: int, code: CssCode):
        check_distinct_cap(t)
        self.basis = ref.basis
        self.t = t
        self.table: CosetTable = coset_table(code, ref.basis)
        self.table.ensure(t)
        canon = [self.table.canonical(b) for b in ref.supports()]
        self.products: Dict[int, Set[int]] = {
            size: {key for _, key in _subset_products(canon, size)} for size in range(1, t)
        }
        self.logger = logging.getLogger(__name__)
        self.logger.debug(
            "reference index %s t=%d sizes %s",
            self.basis, t, {k: len(v) for k, v in self.products.items()},
        )

    def accepts(self, existing_canon: Sequence[int], new_canon: int) -> bool:
        """
        True iff adding an error with canonical form ``new_canon`` to a set whose other
        members have canonical forms ``existing_canon`` keeps it t-distinct to the
        reference, assuming it was before.
        """
        for s in range(2, self.t + 1):
            for a in range(1, s):
                ref_keys = self.products[s - a]
                for _, key in _subset_products(existing_canon, a - 1):
                    key ^= new_canon
                    if key in ref_keys and not self.table.leq_canonical(key, s):
                        return False
        return True


def incremental_distinct(
    existing: FaultSet, new_error: PauliError, ref: FaultSet, t: int, code: CssCode
) -> bool:
    """
    True iff ``existing`` plus ``new_error`` is t-distinct to ``ref``.

    Only subset pairs that contain ``new_error`` are examined; ``existing`` must
    already be t-distinct to ``ref``.
    """
    if new_error.basis != existing.basis or ref.basis != existing.basis:
        raise ContractViolation("fault sets and error must share a basis")
    if new_error.bits in existing:
        return True
    index = ReferenceIndex(ref, t, code)
    existing_canon = [index.table.canonical(b) for b in existing]
    return index.accepts(existing_canon, index.table.canonical(new_error.bits))
