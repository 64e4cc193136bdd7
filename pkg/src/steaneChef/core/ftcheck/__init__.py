"""Distinctness, strict fault tolerance and the quadruple verification conditions."""

from steaneChef.core.ftcheck.distinctness import (
    DistinctnessWitness,
    ReferenceIndex,
    find_witness,
    incremental_distinct,
    is_t_distinct,
)
from steaneChef.core.ftcheck.strict_ft import (
    CONDITIONS,
    StrictnessWitness,
    VerificationReport,
    is_strictly_ft,
    verify_quadruple,
)

__all__ = [
    "CONDITIONS",
    "DistinctnessWitness",
    "ReferenceIndex",
    "StrictnessWitness",
    "VerificationReport",
    "find_witness",
    "incremental_distinct",
    "is_strictly_ft",
    "is_t_distinct",
    "verify_quadruple",
]
