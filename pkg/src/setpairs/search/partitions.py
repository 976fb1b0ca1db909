"""
Exhaustive optima over systems of d-partitions

The skew optimum is compared with the proven bound C(n+d-1, d-1). The strong
optimum is compared with d - 1 WITHOUT assuming it: a VIOLATION there is a
finding, and the largest strong system size is reported alongside.
"""

from fractions import Fraction

from loguru import logger

from ..constructions.partitions import iter_dpartitions
from ..core.counting import binomial
from ..core.error_types import ResourceCapError, ValidationError
from ..core.types import DPartition, DPartitionSystem
from ..core.weights import member_weight
from ..validation.partitions import orderly_overlap
from .budget import SearchBudget
from .engine import BranchAndBound
from .reports import BoundComparison, SearchKind, SearchReport, verify_report
from .set_pairs import scale_values

# (d+1)^n candidate d-partitions
MAX_DPARTITION_CANDIDATES = 256


def _follows(members: list[DPartition], skew: bool) -> list[int]:
    follows = []
    for p in members:
        mask = 0
        for e, q in enumerate(members):
            if orderly_overlap(p, q) and (skew or orderly_overlap(q, p)):
                mask |= 1 << e
        follows.append(mask)
    return follows


def _groupings(members: list[DPartition]) -> list[list[int]]:
    """
    Blocks 1..d-1 and blocks 2..d each determine a member of a valid system
    """
    groupings = []
    for key in (lambda m: m.blocks[:-1], lambda m: m.blocks[1:]):
        ids: dict[tuple[int, ...], int] = {}
        groupings.append([ids.setdefault(key(member), len(ids)) for member in members])
    return groupings


def max_dpartition_weight(
    n: int,
    d: int,
    skew: bool = True,
    prune: bool = True,
    budget: SearchBudget | None = None,
) -> SearchReport:
    """
    Maximum dweight of a (skew) Bollobás system of d-partitions of [n]

    Raises:
        ValidationError: If n < 0, d < 1, or d < 2 for the strong variant
        ResourceCapError: If (d+1)^n > 256
    """
    if n < 0 or d < 1:
        raise ValidationError(f"Need n >= 0 and d >= 1, got n={n}, d={d}", field="n,d")
    if not skew and d < 2:
        raise ValidationError("Strong d-partition probes need d >= 2", field="d")
    if (d + 1) ** n > MAX_DPARTITION_CANDIDATES:
        raise ResourceCapError(
            "d-partition search enumerates (d+1)^n candidates",
            limit=MAX_DPARTITION_CANDIDATES,
            requested=(d + 1) ** n,
        )

    members = sorted(
        iter_dpartitions(n, d),
        key=lambda member: (-member_weight(member.sizes), member.blocks),
    )
    values = [member_weight(member.sizes) for member in members]
    scaled, scale = scale_values(values)
    follows = _follows(members, skew)
    groupings = _groupings(members)

    engine = BranchAndBound(
        values=scaled, follows=follows, groupings=groupings, prune=prune,
        budget=budget or SearchBudget(),
    )
    outcome = engine.run()
    elapsed = engine.elapsed
    exhaustive, nodes, stop_reason = outcome.exhaustive, outcome.nodes, outcome.stop_reason

    max_size = None
    if not skew:
        sizing = BranchAndBound(
            values=[1] * len(members), follows=follows, groupings=groupings, prune=prune,
            budget=budget or SearchBudget(),
        )
        by_size = sizing.run()
        max_size = by_size.best
        elapsed += sizing.elapsed
        nodes += by_size.nodes
        exhaustive = exhaustive and by_size.exhaustive
        stop_reason = stop_reason or by_size.stop_reason

    optimum = Fraction(outcome.best, scale)
    bound = Fraction(binomial(n + d - 1, d - 1)) if skew else Fraction(d - 1)
    report = SearchReport(
        kind=SearchKind.DPARTITION_WEIGHT,
        n=n,
        d=d,
        variant="skew" if skew else "strong",
        optimum=str(optimum),
        witness=DPartitionSystem(n=n, d=d, members=tuple(members[c] for c in outcome.witness)),
        nodes_explored=nodes,
        wall_time=elapsed,
        exhaustive=exhaustive,
        bound=str(bound),
        comparison=BoundComparison.of(optimum, bound),
        max_size=max_size,
        stop_reason=stop_reason,
    )
    if report.conjectural and report.comparison is BoundComparison.VIOLATION:
        logger.warning(f"strong d-partition optimum {report.optimum} exceeds d - 1 = {d - 1} (n={n})")
    logger.info(
        f"dpartition-weight n={n} d={d} {report.variant}: optimum {report.optimum} "
        f"vs {report.bound} ({report.comparison.value})"
    )
    return verify_report(report)
