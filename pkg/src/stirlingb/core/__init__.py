"""Exact arithmetic, errors and size guards."""

from stirlingb.core.errors import (
    ArithmeticOverflowError,
    DomainError,
    ParseError,
    SizeLimitError,
    StirlingError,
    ValidationError,
)
from stirlingb.core.qpoly import QPoly, TPoly, expand_linear_factors, q_bracket

__all__ = [
    "ArithmeticOverflowError",
    "DomainError",
    "ParseError",
    "QPoly",
    "SizeLimitError",
    "StirlingError",
    "TPoly",
    "ValidationError",
    "expand_linear_factors",
    "q_bracket",
]
