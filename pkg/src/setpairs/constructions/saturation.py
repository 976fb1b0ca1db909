"""
Saturation - the augmentation move that drives skew systems to full partitions

A pair (A, B) missing an element x is replaced by the two pairs
(A ∪ {x}, B), (A, B ∪ {x}) in this order. The result is again skew and its
weight grows by exactly 1 / ((a+b+1) C(a+b, a)). The d-partition version
replaces a member by d consecutive members, x added to block 1, ..., d.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from ..core.error_types import InvariantError, ValidationError
from ..core.counting import multinomial
from ..core.types import DPartition, DPartitionSystem, SetPair, SetPairSystem, full_mask
from ..core.weights import dweight, weight
from ..validation.invariants import validate_skew_system
from ..validation.partitions import find_dpartition_violation


def augmentation_gain(sizes: Sequence[int]) -> Fraction:
    """
    Exact weight gain of one move on a member with block sizes a_1..a_d

    d = 2 gives 1 / ((a+b+1) C(a+b, a)); in general (d-1) / ((sum+1) multinomial).
    """
    d = len(sizes)
    return Fraction(d - 1, (sum(sizes) + 1) * multinomial(sizes))


@dataclass(frozen=True)
class SaturationStep:
    """
    One augmentation move

    Attributes:
        index: 0-based position of the replaced pair in the previous system
        element: 1-based label of the added element
        system: System after the move
        weight_before / weight_after: Exact weights around the move
    """

    index: int
    element: int
    system: SetPairSystem
    weight_before: Fraction
    weight_after: Fraction


def _first_deficient(masks: list[tuple[int, int]], full: int) -> tuple[int, int] | None:
    """Lowest index with A ∪ B ≠ [n], and its lowest missing bit"""
    for index, (a, b) in enumerate(masks):
        missing = full & ~(a | b)
        if missing:
            return index, (missing & -missing).bit_length() - 1
    return None


def saturation_steps(system: SetPairSystem) -> Iterator[SaturationStep]:
    """
    Apply the move to the lowest deficient index and lowest missing element
    until every pair is full, yielding each step

    Raises:
        ValidationError: If the input is not a skew Bollobás system
        InvariantError: If a step does not gain exactly augmentation_gain
    """
    validate_skew_system(system)
    current = system
    full = full_mask(current.n)
    current_weight = weight(current)

    while True:
        masks = current.masks()
        target = _first_deficient(masks, full)
        if target is None:
            return
        index, bit = target
        a, b = masks[index]
        x = 1 << bit

        pairs = list(current.pairs)
        pairs[index : index + 1] = [SetPair(a=a | x, b=b), SetPair(a=a, b=b | x)]
        successor = current.with_pairs(pairs)

        gain = augmentation_gain((a.bit_count(), b.bit_count()))
        successor_weight = weight(successor)
        if successor_weight != current_weight + gain:
            raise InvariantError(
                "Augmentation gained the wrong weight",
                context={"index": index, "expected": str(gain), "got": str(successor_weight - current_weight)},
            )
        logger.debug(f"saturate: pair {index + 1} + element {bit + 1}, weight -> {successor_weight}")

        yield SaturationStep(
            index=index,
            element=bit + 1,
            system=successor,
            weight_before=current_weight,
            weight_after=successor_weight,
        )
        current, current_weight = successor, successor_weight


def saturate(system: SetPairSystem) -> SetPairSystem:
    """
    Fixed point of the augmentation move: a skew system with B_i = [n] \\ A_i

    Terminates: each step raises sum(|A_i| + |B_i|) by one.
    """
    result = system
    for step in saturation_steps(system):
        result = step.system
    return result


def saturate_dpartitions(system: DPartitionSystem) -> DPartitionSystem:
    """
    d-partition analogue: a member missing x becomes d consecutive members
    with x added to block 1, ..., d (lowest deficient index, lowest x)

    Raises:
        ValidationError: If the input is not a skew system of d-partitions
        InvariantError: If a step does not gain exactly augmentation_gain
    """
    violation = find_dpartition_violation(system, skew=True)
    if violation is not None:
        i, j = violation
        raise ValidationError(
            f"Not a skew system of d-partitions: members {i + 1}, {j + 1} do not orderly overlap",
            field="members",
        )

    full = full_mask(system.n)
    current = system
    current_weight = dweight(current)
    while True:
        deficient = next(
            (index for index, member in enumerate(current.members) if member.support != full),
            None,
        )
        if deficient is None:
            return current
        member = current.members[deficient]
        missing = full & ~member.support
        x = missing & -missing

        replacements = []
        for position in range(current.d):
            blocks = list(member.blocks)
            blocks[position] |= x
            replacements.append(DPartition(blocks=tuple(blocks)))
        members = list(current.members)
        members[deficient : deficient + 1] = replacements
        successor = current.with_members(members)

        successor_weight = dweight(successor)
        if successor_weight != current_weight + augmentation_gain(member.sizes):
            raise InvariantError("d-partition augmentation gained the wrong weight")
        current, current_weight = successor, successor_weight
