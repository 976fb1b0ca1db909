"""
d-partition verifiers - orderly overlap, Bollobás and skew Bollobás systems of d-partitions
"""

from ..core.error_types import ValidationError
from ..core.types import DPartition, DPartitionSystem


def _prefix_unions(member: DPartition) -> list[int]:
    """prefix[q] = F^(1) ∪ ... ∪ F^(q) (0-based: blocks[0..q-1])"""
    prefix = [0]
    for block in member.blocks[:-1]:
        prefix.append(prefix[-1] | block)
    return prefix


def _overlaps(prefix_p: list[int], q_member: DPartition) -> bool:
    blocks = q_member.blocks
    return any(prefix_p[q] & blocks[q] for q in range(1, len(blocks)))


def orderly_overlap(p: DPartition, q: DPartition) -> bool:
    """
    There exist p < q (block indices) with P.blocks[p] ∩ Q.blocks[q] ≠ ∅

    Asymmetric in (P, Q).

    Raises:
        ValidationError: If P and Q have different d
    """
    if p.d != q.d:
        raise ValidationError(f"Block counts differ: {p.d} vs {q.d}", field="d")
    return _overlaps(_prefix_unions(p), q)


def find_dpartition_violation(system: DPartitionSystem, skew: bool) -> tuple[int, int] | None:
    """
    First pair (i, j) (0-based) that fails to orderly overlap as required

    skew=True checks (i, j) for i < j; skew=False additionally checks (j, i).
    """
    members = system.members
    prefixes = [_prefix_unions(member) for member in members]
    for j in range(len(members)):
        for i in range(j):
            if not _overlaps(prefixes[i], members[j]):
                return (i, j)
            if not skew and not _overlaps(prefixes[j], members[i]):
                return (j, i)
    return None


def is_dpartition_system(system: DPartitionSystem, skew: bool) -> bool:
    """
    Skew: orderly overlap for all i < j. Strong: in both directions.
    """
    return find_dpartition_violation(system, skew=skew) is None
