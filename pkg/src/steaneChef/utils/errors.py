"""
Exception hierarchy for steaneChef.

Every error carries the process exit code the CLI reports for it, so commands can
raise freely and let ``handle_errors`` translate.
"""

from typing import Any, Dict, List, Optional, Sequence

from steaneChef.utils.const import SYNTHESIS_EXHAUSTED, USAGE_ERROR, VIOLATIONS


class SteaneChefError(Exception):
    """Base class for all steaneChef errors."""

    exit_code = USAGE_ERROR


class ContractViolation(SteaneChefError, ValueError):
    """A caller broke an operation's precondition (bad index, length mismatch, ...)."""


class CssConditionError(SteaneChefError):
    """An X check anticommutes with a Z check."""

    def __init__(self, x_row: int, z_row: int):
        self.x_row = x_row
        self.z_row = z_row
        super().__init__(f"CSS condition violated: HX row {x_row} anticommutes with HZ row {z_row}")


class _LineError(SteaneChefError):
    kind = "parse"

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{self.kind} error: {where}{message}")


class CheckFileParseError(_LineError):
    kind = "check file"


class CircuitParseError(_LineError):
    kind = "circuit"


class ProtocolParseError(_LineError):
    kind = "protocol"


class ConfigParseError(_LineError):
    kind = "config"


class UnknownCodeError(SteaneChefError, KeyError):
    """Raised for a registry name that does not exist."""

    def __init__(self, name: str, available: Sequence[str], reason: Optional[str] = None):
        self.name = name
        self.available = list(available)
        self.reason = reason
        message = f"unknown code '{name}'; available: {', '.join(self.available)}"
        if reason:
            message = f"code '{name}' is not shipped ({reason}); available: {', '.join(self.available)}"
        super().__init__(message)

    def __str__(self) -> str:
        return self.args[0]


class CapExceededError(SteaneChefError):
    """A configured search cap (t, weight, distance) would be exceeded."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} {requested} exceeds configured cap {cap}")


class SynthesisExhaustedError(SteaneChefError):
    """Guided synthesis ran out of restarts."""

    exit_code = SYNTHESIS_EXHAUSTED

    def __init__(self, stage: str, stats: Optional[Dict[str, Any]] = None):
        self.stage = stage
        self.stats = dict(stats or {})
        detail = ", ".join(f"{k}={v}" for k, v in self.stats.items())
        super().__init__(f"synthesis of {stage} exhausted its restarts ({detail})")


class VerificationError(SteaneChefError):
    """A quadruple was rejected before the distinctness checks ran."""

    exit_code = VIOLATIONS

    def __init__(self, message: str, failing: Optional[List[int]] = None):
        self.failing = list(failing or [])
        super().__init__(message)


class BudgetExceededError(SteaneChefError):
    """Exhaustive fault injection would enumerate more combinations than allowed."""

    def __init__(self, combinations: int, budget: int):
        self.combinations = combinations
        self.budget = budget
        super().__init__(
            f"{combinations} fault combinations exceed the budget of {budget}; pass --budget to override"
        )
