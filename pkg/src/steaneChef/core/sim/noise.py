"""Circuit-level noise model."""

from dataclasses import dataclass
from typing import Dict

from steaneChef.utils.errors import ContractViolation

IDLE_STRENGTH = 100


@dataclass(frozen=True)
class NoiseModel:
    """
    Depolarizing circuit noise of strength ``p``.

    Every CNOT is followed by one of the 15 non-identity two-qubit Paulis with
    probability ``p / 15`` each, every initialization and measurement flips with
    probability ``2p / 3`` and every idle qubit of a CNOT layer suffers X, Y or Z with
    probability ``p / 300`` each.
    """

    p: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ContractViolation(f"physical error rate must lie in [0, 1], got {self.p}")

    @classmethod
    def scaled(cls, p: float) -> "NoiseModel":
        return cls(float(p))

    @classmethod
    def noiseless(cls) -> "NoiseModel":
        return cls(0.0)

    @property
    def is_noiseless(self) -> bool:
        return self.p == 0.0

    @property
    def two_qubit_depol(self) -> float:
        """Total probability of a fault after a CNOT."""
        return self.p

    @property
    def prep_meas_flip(self) -> float:
        return 2.0 * self.p / 3.0

    @property
    def idle_depol(self) -> float:
        """Total probability of a fault on an idle qubit in one layer."""
        return self.p / IDLE_STRENGTH

    @property
    def data_depol(self) -> float:
        """Single-qubit depolarizing strength applied to the ideal |+>_L block."""
        return self.p

    def to_dict(self) -> Dict[str, float]:
        return {
            "p": self.p,
            "two_qubit_depol": self.two_qubit_depol,
            "prep_meas_flip": self.prep_meas_flip,
            "idle_depol": self.idle_depol,
        }
