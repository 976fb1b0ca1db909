"""
Weight functionals - LYM-type sums for set-pair and d-partition systems

Weights are pure functionals: they accept systems that are not valid
Bollobás systems (search needs weights of partial candidates).
"""

from collections.abc import Sequence
from fractions import Fraction

from .counting import binomial, multinomial
from .types import DPartitionSystem, SetPairSystem, SubsetMask


def pair_weight(size_a: int, size_b: int) -> Fraction:
    """1 / C(|A| + |B|, |A|)"""
    return Fraction(1, binomial(size_a + size_b, size_a))


def weight(system: SetPairSystem) -> Fraction:
    """
    w(P) = sum_i 1 / C(|A_i| + |B_i|, |A_i|)

    Order-independent, exact.
    """
    return sum(
        (pair_weight(pair.size_a, pair.size_b) for pair in system.pairs),
        start=Fraction(0),
    )


def is_antichain(family: Sequence[SubsetMask | int]) -> bool:
    """
    No member is contained in another member at a different index

    Two equal members at different indices violate the condition.
    """
    for i, f_i in enumerate(family):
        for j, f_j in enumerate(family):
            if i != j and f_i & f_j == f_i:
                return False
    return True


def lym_weight(family: Sequence[SubsetMask | int], n: int) -> Fraction:
    """sum_i 1 / C(n, |F_i|)"""
    return sum(
        (Fraction(1, binomial(n, member.bit_count())) for member in family),
        start=Fraction(0),
    )


def member_weight(sizes: Sequence[int]) -> Fraction:
    """1 / multinomial(|F^(1)|, ..., |F^(d)|)"""
    return Fraction(1, multinomial(sizes))


def dweight(system: DPartitionSystem) -> Fraction:
    """Multinomial analogue of weight() for d-partition systems"""
    return sum(
        (member_weight(member.sizes) for member in system.members),
        start=Fraction(0),
    )
