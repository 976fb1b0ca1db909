"""
Search - exhaustive and branch-and-bound optima with re-verified witnesses
"""

from .budget import BudgetConfig, Continue, Exhausted, SearchBudget
from .engine import BranchAndBound, SearchOutcome
from .ordering import ordering_feasible
from .partitions import max_dpartition_weight
from .reports import BoundComparison, SearchKind, SearchReport, verify_report
from .set_pairs import (
    equality_report,
    equality_structure,
    max_skew_weight,
    max_strong_weight,
    max_t_system_size,
)

__all__ = [
    # Budget
    "BudgetConfig",
    "SearchBudget",
    "Continue",
    "Exhausted",
    # Engine
    "BranchAndBound",
    "SearchOutcome",
    # Reports
    "SearchKind",
    "BoundComparison",
    "SearchReport",
    "verify_report",
    # Queries
    "max_skew_weight",
    "equality_report",
    "equality_structure",
    "max_strong_weight",
    "max_t_system_size",
    "max_dpartition_weight",
    "ordering_feasible",
]
