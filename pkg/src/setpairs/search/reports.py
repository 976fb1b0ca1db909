"""
Search reports - optimum, witness, bound comparison and re-verification
"""

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.counting import format_rational, parse_rational
from ..core.error_types import InvariantError
from ..core.types import DPartitionSystem, SetPairSystem
from ..core.weights import dweight, weight
from ..validation.invariants import find_violation
from ..validation.partitions import find_dpartition_violation


class SearchKind(str, Enum):
    SKEW_WEIGHT = "skew-weight"
    EQUALITY = "equality"
    STRONG_WEIGHT = "strong-weight"
    T_SYSTEM_SIZE = "t-system-size"
    DPARTITION_WEIGHT = "dpartition-weight"


class BoundComparison(str, Enum):
    """Optimum against the known (or conjectured) bound"""

    BELOW = "below"
    TIGHT = "tight"
    VIOLATION = "violation"

    @classmethod
    def of(cls, optimum: Fraction, bound: Fraction) -> "BoundComparison":
        if optimum < bound:
            return cls.BELOW
        if optimum == bound:
            return cls.TIGHT
        return cls.VIOLATION


class SearchReport(BaseModel):
    """
    Result of one search query

    Attributes:
        kind: Which query ran
        n, t, d: Parameters (t and d only where they apply)
        variant: "skew" or "strong"
        mode: "restricted" (full pairs only) or "unrestricted"
        optimum: Exact optimum as "p/q" (sizes as "m/1")
        witness: A system attaining the optimum
        nodes_explored: Expanded search states
        wall_time: Seconds; excluded from replayable output
        exhaustive: The search space was fully covered
        bound: Bound the optimum is compared with, as "p/q"
        comparison: BELOW / TIGHT / VIOLATION
        max_size: Largest system size (strong d-partition probes only)
        equality_holds: Every optimum consists of complementary pairs (equality query only)
        optima_count: Number of optimal systems found (equality query only)
        stop_reason: Why the budget ended the search
    """

    kind: SearchKind
    n: int = Field(..., ge=0)
    t: int | None = None
    d: int | None = None
    variant: str = "skew"
    mode: str = "unrestricted"
    optimum: str
    witness: SetPairSystem | DPartitionSystem
    nodes_explored: int = Field(0, ge=0)
    wall_time: float = Field(0.0, ge=0)
    exhaustive: bool = True
    bound: str
    comparison: BoundComparison
    max_size: int | None = None
    equality_holds: bool | None = None
    optima_count: int | None = None
    stop_reason: str | None = None

    model_config = ConfigDict(frozen=True)

    @field_validator("optimum", "bound")
    @classmethod
    def normalize_rational(cls, value: str) -> str:
        return format_rational(parse_rational(value))

    @property
    def optimum_value(self) -> Fraction:
        return parse_rational(self.optimum)

    @property
    def bound_value(self) -> Fraction:
        return parse_rational(self.bound)

    @property
    def is_size_query(self) -> bool:
        return self.kind is SearchKind.T_SYSTEM_SIZE

    @property
    def conjectural(self) -> bool:
        """Strong d-partition bounds are conjectures: VIOLATION is data, not a bug"""
        return self.kind is SearchKind.DPARTITION_WEIGHT and self.variant == "strong"

    def to_json(self) -> dict[str, Any]:
        """Replayable dump: witness in the standard system format, no wall time"""
        data = self.model_dump(mode="json", exclude={"witness", "wall_time"})
        data["witness"] = self.witness.to_json()
        return data

    def table(self) -> str:
        """Human-readable summary"""
        params = [f"n={self.n}"]
        if self.t is not None:
            params.append(f"t={self.t}")
        if self.d is not None:
            params.append(f"d={self.d}")
        rows = [
            ("query", f"{self.kind.value} ({self.variant}, {self.mode})"),
            ("parameters", ", ".join(params)),
            ("optimum", self.optimum),
            ("bound", f"{self.bound} ({self.comparison.value.upper()})"),
            ("witness size", str(len(self.witness))),
            ("nodes", str(self.nodes_explored)),
            ("exhaustive", "yes" if self.exhaustive else f"no ({self.stop_reason})"),
        ]
        if self.max_size is not None:
            rows.append(("max size", str(self.max_size)))
        if self.equality_holds is not None:
            rows.append(("equality", f"{self.equality_holds} over {self.optima_count} optima"))
        width = max(len(label) for label, _ in rows)
        return "\n".join(f"{label.ljust(width)}  {value}" for label, value in rows)


def verify_report(report: SearchReport) -> SearchReport:
    """
    Re-verify the witness and recompute the optimum

    Raises:
        InvariantError: If the witness fails its verifier, does not attain the
            optimum, or a proven bound is exceeded
    """
    witness = report.witness
    skew = report.variant == "skew"
    if isinstance(witness, DPartitionSystem):
        failed = find_dpartition_violation(witness, skew=skew) is not None
        value = dweight(witness)
    else:
        failed = find_violation(witness, t=report.t or 0, skew=skew) is not None
        value = Fraction(len(witness)) if report.is_size_query else weight(witness)

    if failed:
        raise InvariantError("Search witness fails its verifier", context={"kind": report.kind.value})
    if value != report.optimum_value:
        raise InvariantError(
            "Search witness does not attain the reported optimum",
            context={"optimum": report.optimum, "witness": format_rational(value)},
        )
    if report.comparison is BoundComparison.VIOLATION and not report.conjectural:
        raise InvariantError(
            "Search optimum exceeds a proven bound",
            context={"kind": report.kind.value, "optimum": report.optimum, "bound": report.bound},
        )
    return report
