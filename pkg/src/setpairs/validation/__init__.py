"""
Validation module - set-pair and d-partition verifiers
"""

from .invariants import (
    ValidSkewSystem,
    Violation,
    ViolationKind,
    find_violation,
    is_bollobas,
    is_skew_bollobas,
    is_t_system,
    validate_skew_system,
)
from .partitions import find_dpartition_violation, is_dpartition_system, orderly_overlap

__all__ = [
    "ValidSkewSystem",
    "Violation",
    "ViolationKind",
    "find_violation",
    "is_bollobas",
    "is_skew_bollobas",
    "is_t_system",
    "validate_skew_system",
    "orderly_overlap",
    "find_dpartition_violation",
    "is_dpartition_system",
]
