"""
Extremal set-pair constructions

- full_power_set_system: all (A, [n] \\ A) in size-decreasing order (weight n+1)
- furedi_construction: uniform skew t-system of size C(a+b, a)
- t_system_construction: non-uniform skew t-system of size 2^(n-t)
- valid_complement_ordering: which orders of the power set give a skew system
"""

from collections.abc import Sequence
from itertools import combinations

from ..core.error_types import ResourceCapError, ValidationError
from ..core.types import MAX_GROUND_SIZE, SetPairSystem, SubsetMask, full_mask
from ..validation.invariants import is_skew_bollobas

# 2^n pairs are materialized
MAX_MATERIALIZED_EXPONENT = 20


def _layered_order(masks: list[int]) -> list[int]:
    """|A| non-increasing, ties by ascending mask"""
    return sorted(masks, key=lambda mask: (-mask.bit_count(), mask))


def full_power_set_system(n: int) -> SetPairSystem:
    """
    All 2^n pairs (A, [n] \\ A), ordered by |A| non-increasing then ascending mask

    Raises:
        ResourceCapError: If n > 20
        ValidationError: If n < 0
    """
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}", field="n")
    if n > MAX_MATERIALIZED_EXPONENT:
        raise ResourceCapError(
            "full_power_set_system materializes 2^n pairs",
            limit=MAX_MATERIALIZED_EXPONENT,
            requested=n,
        )
    full = full_mask(n)
    order = _layered_order(list(range(1 << n)))
    return SetPairSystem.from_masks(n, ((a, full ^ a) for a in order))


def _contains_earlier(subsets: Sequence[int]) -> bool:
    """Some A_i ⊆ A_j with i < j"""
    for j, a_j in enumerate(subsets):
        for i in range(j):
            if subsets[i] & a_j == subsets[i]:
                return True
    return False


def valid_complement_ordering(subsets: Sequence[SubsetMask | int], n: int) -> bool:
    """
    Does this order of the power set give a skew system {(A_i, [n] \\ A_i)}?

    Runs the direct skew check and the containment criterion (no A_i ⊆ A_j
    for i < j) and returns their conjunction. The two always agree.

    Raises:
        ValidationError: If subsets is not a permutation of the power set of [n]
    """
    if not 0 <= n <= MAX_MATERIALIZED_EXPONENT:
        raise ValidationError(f"n must satisfy 0 <= n <= {MAX_MATERIALIZED_EXPONENT}", field="n")
    if len(subsets) != 1 << n or set(subsets) != set(range(1 << n)):
        raise ValidationError(
            f"Expected a permutation of all {1 << n} subsets of [{n}]", field="subsets"
        )

    full = full_mask(n)
    system = SetPairSystem.from_masks(n, ((a, full ^ a) for a in subsets))
    direct = is_skew_bollobas(system)
    criterion = not _contains_earlier(subsets)
    return direct and criterion


def furedi_construction(a: int, b: int, t: int) -> SetPairSystem:
    """
    Uniform skew t-system on [a+b+t] meeting m = C(a+b, a)

    A runs over the (a+t)-subsets containing [t], in ascending mask order;
    B(A) = [t] ∪ ([t+1, a+b+t] \\ A).

    Raises:
        ValidationError: If a, b or t is negative or a+b+t > 64
    """
    if min(a, b, t) < 0:
        raise ValidationError(f"a, b, t must be >= 0, got {(a, b, t)}", field="a,b,t")
    n = a + b + t
    if n > MAX_GROUND_SIZE:
        raise ValidationError(f"a+b+t must be <= {MAX_GROUND_SIZE}, got {n}", field="a,b,t")

    core = full_mask(t)
    rest = full_mask(n) ^ core
    free = range(t, n)
    masks = sorted(core | sum(1 << bit for bit in chosen) for chosen in combinations(free, a))
    return SetPairSystem.from_masks(n, ((mask, core | (rest & ~mask)) for mask in masks))


def t_system_construction(n: int, t: int) -> SetPairSystem:
    """
    Skew t-system on [n] of size 2^(n-t)

    A_i runs over all supersets of [t], |A_i| non-increasing then ascending mask;
    B_i = [t] ∪ ([t+1, n] \\ A_i).

    Raises:
        ValidationError: If not 0 <= t <= n <= 64
        ResourceCapError: If n - t > 20
    """
    if not 0 <= t <= n <= MAX_GROUND_SIZE:
        raise ValidationError(f"Need 0 <= t <= n <= {MAX_GROUND_SIZE}, got n={n}, t={t}", field="n,t")
    if n - t > MAX_MATERIALIZED_EXPONENT:
        raise ResourceCapError(
            "t_system_construction materializes 2^(n-t) pairs",
            limit=MAX_MATERIALIZED_EXPONENT,
            requested=n - t,
        )
    core = full_mask(t)
    rest = full_mask(n) ^ core
    order = _layered_order([core | (extra << t) for extra in range(1 << (n - t))])
    return SetPairSystem.from_masks(n, ((mask, core | (rest & ~mask)) for mask in order))
