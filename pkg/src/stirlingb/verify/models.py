"""Data models for identity verification results."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from stirlingb.core.errors import ValidationError


class VerifyStatus(str, Enum):
    """Outcome of one identity sweep."""

    PASS = "pass"
    FAIL = "fail"


@dataclass
class Counterexample:
    """First parameter tuple at which an identity failed."""

    parameters: dict[str, Any]
    expected: str
    actual: str

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "parameters": self.parameters,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class VerifyReport:
    """Result of sweeping one identity over a parameter range."""

    identity: str
    range: dict[str, int] = field(default_factory=dict)
    status: VerifyStatus = VerifyStatus.PASS
    counterexample: Optional[Counterexample] = None
    elapsed_ms: int = 0
    description: str = ""

    def __post_init__(self) -> None:
        if self.status is VerifyStatus.FAIL and self.counterexample is None:
            raise ValidationError(f"failed report for {self.identity} carries no counterexample")

    @property
    def passed(self) -> bool:
        return self.status is VerifyStatus.PASS

    def to_dict(self) -> dict:
        """Convert to dictionary (the JSON-lines payload)."""
        return {
            "identity": self.identity,
            "range": self.range,
            "status": self.status.value,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "elapsed_ms": self.elapsed_ms,
        }
