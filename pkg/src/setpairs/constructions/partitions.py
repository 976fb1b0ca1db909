"""
d-partition constructions

- iter_dpartitions / count_dpartitions: all (d+1)^n d-partitions of [n]
- lex_full_dpartitions: all d^n full d-partitions, size vectors in the
  inverted lexicographic order (skew system, weight C(n+d-1, d-1))
- all_full_dpartitions: all full d-partitions with prescribed block sizes
  (strong system, weight 1)
"""

from collections.abc import Iterator, Sequence
from itertools import combinations, product

from ..core.error_types import ResourceCapError, ValidationError
from ..core.types import DPartition, DPartitionSystem, full_mask

# d^n members are materialized
MAX_LEX_MEMBERS = 1 << 20

# b = a_1 + ... + a_d
MAX_COMPOSITION_TOTAL = 12


def _blocks_from_assignment(assignment: Sequence[int], d: int) -> tuple[int, ...]:
    """assignment[x] = block index of element x+1, or d for 'not covered'"""
    blocks = [0] * (d + 1)
    for element, block in enumerate(assignment):
        blocks[block] |= 1 << element
    return tuple(blocks[:d])


def iter_dpartitions(n: int, d: int, full: bool = False) -> Iterator[DPartition]:
    """
    Every d-partition of [n] ((d+1)^n of them), or only the full ones (d^n)

    Raises:
        ValidationError: If n < 0 or d < 1
    """
    if n < 0 or d < 1:
        raise ValidationError(f"Need n >= 0 and d >= 1, got n={n}, d={d}", field="n,d")
    choices = range(d) if full else range(d + 1)
    for assignment in product(choices, repeat=n):
        yield DPartition(blocks=_blocks_from_assignment(assignment, d))


def count_dpartitions(n: int, d: int) -> int:
    """(d+1)^n, counted by enumeration"""
    return sum(1 for _ in iter_dpartitions(n, d))


def lex_key(sizes: Sequence[int]) -> tuple[int, ...]:
    """
    Sort key for the lexicographic order of size vectors with the larger
    first-differing coordinate placed earlier
    """
    return tuple(-size for size in sizes)


def lex_full_dpartitions(n: int, d: int) -> DPartitionSystem:
    """
    All d^n full d-partitions of [n]

    Ordered so that the size vector of every later member is <=_L the size
    vector of every earlier member; equal size vectors in ascending block-mask
    order.

    Raises:
        ValidationError: If d < 1 or n < 0
        ResourceCapError: If d^n > 2^20
    """
    if d < 1 or n < 0:
        raise ValidationError(f"Need n >= 0 and d >= 1, got n={n}, d={d}", field="n,d")
    if d**n > MAX_LEX_MEMBERS:
        raise ResourceCapError(
            "lex_full_dpartitions materializes d^n members",
            limit=MAX_LEX_MEMBERS,
            requested=d**n,
        )
    members = sorted(
        iter_dpartitions(n, d, full=True),
        key=lambda member: (lex_key(member.sizes), member.blocks),
    )
    return DPartitionSystem(n=n, d=d, members=tuple(members))


def _fill_blocks(remaining: int, sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not sizes:
        yield ()
        return
    elements = [bit for bit in range(remaining.bit_length()) if remaining >> bit & 1]
    for chosen in combinations(elements, sizes[0]):
        block = sum(1 << bit for bit in chosen)
        for rest in _fill_blocks(remaining ^ block, sizes[1:]):
            yield (block, *rest)


def all_full_dpartitions(parts: Sequence[int]) -> DPartitionSystem:
    """
    All full d-partitions of [b], b = sum(parts), with |block p| = parts[p]

    Raises:
        ValidationError: If parts is empty or has a non-positive entry
        ResourceCapError: If b > 12
    """
    if not parts or any(part < 1 for part in parts):
        raise ValidationError(f"Block sizes must be positive integers, got {list(parts)}", field="parts")
    total = sum(parts)
    if total > MAX_COMPOSITION_TOTAL:
        raise ResourceCapError(
            "all_full_dpartitions enumerates multinomial(parts) members",
            limit=MAX_COMPOSITION_TOTAL,
            requested=total,
        )
    members = tuple(DPartition(blocks=blocks) for blocks in _fill_blocks(full_mask(total), parts))
    return DPartitionSystem(n=total, d=len(parts), members=members)
