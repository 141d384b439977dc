"""Violation values reported by RG-word validators."""

from dataclasses import dataclass

from stirlingb.core.errors import ValidationError


@dataclass(frozen=True)
class Violation:
    """A failed RG-word condition at a 1-based position."""

    condition: str
    position: int
    detail: str = ""

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"condition": self.condition, "position": self.position, "detail": self.detail}

    def to_error(self, kind: str) -> ValidationError:
        message = f"invalid {kind}: condition ({self.condition}) fails at position {self.position}"
        if self.detail:
            message += f": {self.detail}"
        return ValidationError(
            message, condition=self.condition, position=self.position, details=self.to_dict()
        )
