"""
Set-pair system verifiers - Bollobás, skew Bollobás and t-systems

Smart Constructor pattern: only systems that pass the skew check can be
wrapped in the ValidSkewSystem type.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NewType

from ..core.error_types import ValidationError
from ..core.types import SetPairSystem

# Opaque type: can only be created via validate_skew_system()
ValidSkewSystem = NewType("ValidSkewSystem", SetPairSystem)


class ViolationKind(str, Enum):
    DIAGONAL = "diagonal"  # |A_i ∩ B_i| > t
    CROSS = "cross"  # |A_i ∩ B_j| <= t for a required (i, j)


@dataclass(frozen=True)
class Violation:
    """
    First violated cell of a verifier (0-based indices)
    """

    i: int
    j: int
    kind: ViolationKind
    intersection: int  # |A_i ∩ B_j|

    def describe(self) -> str:
        """1-based, as printed by the CLI"""
        return (
            f"cell ({self.i + 1}, {self.j + 1}) {self.kind.value}: "
            f"|A_{self.i + 1} ∩ B_{self.j + 1}| = {self.intersection}"
        )


def find_violation(system: SetPairSystem, t: int = 0, skew: bool = True) -> Violation | None:
    """
    Scan a system for the first violated condition

    Diagonal cells need |A_i ∩ B_i| <= t; off-diagonal cells need
    |A_i ∩ B_j| > t for i < j, and also for i > j unless skew.
    Diagonal cells are checked first, then columns j in order.

    Returns:
        The first violation, or None if the system passes
    """
    masks = system.masks()

    for i, (a, b) in enumerate(masks):
        common = (a & b).bit_count()
        if common > t:
            return Violation(i=i, j=i, kind=ViolationKind.DIAGONAL, intersection=common)

    for j, (_, b_j) in enumerate(masks):
        rows = range(j) if skew else range(len(masks))
        for i in rows:
            if i == j:
                continue
            common = (masks[i][0] & b_j).bit_count()
            if common <= t:
                return Violation(i=i, j=j, kind=ViolationKind.CROSS, intersection=common)

    return None


def is_t_system(system: SetPairSystem, t: int, skew: bool) -> bool:
    """
    Bollobás t-system (skew t-system when skew=True)

    Raises:
        ValidationError: If t is outside 0..n
    """
    if not 0 <= t <= system.n:
        raise ValidationError(f"t must satisfy 0 <= t <= n={system.n}, got {t}", field="t")
    return find_violation(system, t=t, skew=skew) is None


def is_bollobas(system: SetPairSystem) -> bool:
    """A_i ∩ B_i = ∅ and A_i ∩ B_j ≠ ∅ for all i ≠ j"""
    return find_violation(system, t=0, skew=False) is None


def is_skew_bollobas(system: SetPairSystem) -> bool:
    """A_i ∩ B_i = ∅ and A_i ∩ B_j ≠ ∅ for all i < j"""
    return find_violation(system, t=0, skew=True) is None


def validate_skew_system(system: SetPairSystem) -> ValidSkewSystem:
    """
    Smart Constructor for skew Bollobás systems

    Raises:
        ValidationError: With the first violated cell

    Returns:
        ValidSkewSystem: Opaque type guaranteeing the skew condition
    """
    violation = find_violation(system, t=0, skew=True)
    if violation is not None:
        raise ValidationError(
            f"Not a skew Bollobás system: {violation.describe()}",
            field="pairs",
            context={"i": violation.i + 1, "j": violation.j + 1, "kind": violation.kind.value},
        )
    return ValidSkewSystem(system)
