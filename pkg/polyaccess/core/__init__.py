"""Core utilities for polyaccess."""

from .exceptions import (
    ArityError,
    ClosureViolation,
    ImmersionError,
    MinorSizeError,
    ParseError,
    PolyaccessError,
    VarTableError,
    VarTableMismatch,
)

__all__ = [
    "ArityError",
    "ClosureViolation",
    "ImmersionError",
    "MinorSizeError",
    "ParseError",
    "PolyaccessError",
    "VarTableError",
    "VarTableMismatch",
]
