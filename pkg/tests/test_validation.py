"""
Tests for the set-pair and d-partition verifiers
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from setpairs.constructions import (
    all_full_dpartitions,
    full_power_set_system,
    furedi_construction,
    lex_full_dpartitions,
    t_system_construction,
)
from setpairs.core.error_types import ValidationError
from setpairs.core.types import DPartition, DPartitionSystem, SetPair, SetPairSystem
from setpairs.validation import (
    ViolationKind,
    find_violation,
    is_bollobas,
    is_dpartition_system,
    is_skew_bollobas,
    is_t_system,
    orderly_overlap,
    validate_skew_system,
)


def system(n, *pairs):
    return SetPairSystem(n=n, pairs=tuple(SetPair.from_elements(a, b) for a, b in pairs))


def test_example_system_is_skew_but_not_strong():
    """Size-decreasing power set: ({1,2},∅) vs (∅,{1,2}) fails the j < i direction"""
    example = full_power_set_system(2)
    assert is_skew_bollobas(example)
    assert not is_bollobas(example)


def test_empty_system_is_bollobas():
    assert is_bollobas(SetPairSystem(n=3))
    assert is_skew_bollobas(SetPairSystem(n=3))


def test_swapped_singletons_are_bollobas():
    assert is_bollobas(system(2, ([1], [2]), ([2], [1])))


def test_single_empty_pair_is_skew():
    assert is_skew_bollobas(system(0, ([], [])))


def test_reversed_order_is_not_skew():
    """A_1 ∩ B_2 = ∅"""
    assert not is_skew_bollobas(system(1, ([], [1]), ([1], [])))


def test_find_violation_reports_diagonal_first():
    found = find_violation(system(2, ([1], [1]), ([2], [2])))
    assert found is not None
    assert (found.i, found.j, found.kind) == (0, 0, ViolationKind.DIAGONAL)
    assert found.describe() == "cell (1, 1) diagonal: |A_1 ∩ B_1| = 1"


def test_find_violation_reports_cross_cell():
    found = find_violation(full_power_set_system(2), skew=False)
    assert found is not None
    assert found.kind is ViolationKind.CROSS
    assert found.i > found.j
    assert found.intersection == 0


def test_duplicate_pairs_are_rejected_by_the_verifier():
    assert not is_skew_bollobas(system(2, ([1], [2]), ([1], [2])))


def test_t_system_examples():
    assert is_t_system(furedi_construction(1, 1, 1), t=1, skew=True)
    assert is_t_system(t_system_construction(3, 1), t=1, skew=True)
    assert not is_t_system(t_system_construction(3, 1), t=0, skew=True)


def test_t_system_rejects_t_out_of_range():
    with pytest.raises(ValidationError):
        is_t_system(SetPairSystem(n=2), t=3, skew=True)
    with pytest.raises(ValidationError):
        is_t_system(SetPairSystem(n=2), t=-1, skew=True)


def test_validate_skew_system_smart_constructor():
    valid = validate_skew_system(full_power_set_system(2))
    assert valid == full_power_set_system(2)

    with pytest.raises(ValidationError) as exc_info:
        validate_skew_system(system(1, ([], [1]), ([1], [])))
    assert exc_info.value.context["i"] == 1
    assert exc_info.value.context["j"] == 2


pairs_strategy = st.lists(
    st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda ab: ab[0] & ab[1] == 0),
    max_size=6,
)


@given(pairs_strategy)
@settings(max_examples=200)
def test_zero_system_coincides_with_skew(masks):
    """At t = 0 the t-system check is the skew check"""
    candidate = SetPairSystem.from_masks(3, masks)
    assert is_t_system(candidate, 0, skew=True) == is_skew_bollobas(candidate)
    assert is_t_system(candidate, 0, skew=False) == is_bollobas(candidate)


@given(pairs_strategy)
@settings(max_examples=200)
def test_bollobas_implies_skew_implies_prefix_skew(masks):
    candidate = SetPairSystem.from_masks(3, masks)
    if is_bollobas(candidate):
        assert is_skew_bollobas(candidate)
    if is_skew_bollobas(candidate):
        for cut in range(len(masks) + 1):
            assert is_skew_bollobas(SetPairSystem.from_masks(3, masks[:cut]))


def test_orderly_overlap_examples():
    p = DPartition.from_elements([[1], [2]])
    q = DPartition.from_elements([[2], [1]])
    assert orderly_overlap(p, q)
    assert orderly_overlap(q, p)
    empty = DPartition(blocks=(0, 0, 0))
    assert not orderly_overlap(empty, DPartition.from_elements([[1], [2], [3]]))


def test_orderly_overlap_is_asymmetric():
    a_first = DPartition.from_elements([[1], []])
    b_first = DPartition.from_elements([[], [1]])
    assert orderly_overlap(a_first, b_first)
    assert not orderly_overlap(b_first, a_first)


def test_orderly_overlap_rejects_mismatched_d():
    with pytest.raises(ValidationError):
        orderly_overlap(DPartition(blocks=(1, 0)), DPartition(blocks=(1, 0, 0)))


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_orderly_overlap_for_two_blocks_is_the_pair_condition(a_p, b_p, a_q, b_q):
    """d = 2: orderly_overlap(P, Q) iff P.A ∩ Q.B ≠ ∅"""
    b_p &= ~a_p
    b_q &= ~a_q
    p = DPartition(blocks=(a_p, b_p))
    q = DPartition(blocks=(a_q, b_q))
    assert orderly_overlap(p, q) == bool(a_p & b_q)


def test_dpartition_system_variants():
    assert is_dpartition_system(lex_full_dpartitions(2, 3), skew=True)
    assert is_dpartition_system(all_full_dpartitions([2, 1]), skew=False)
    assert not is_dpartition_system(lex_full_dpartitions(1, 2), skew=False)


def test_duplicate_dpartitions_fail():
    member = DPartition.from_elements([[1], []])
    twice = DPartitionSystem(n=1, d=2, members=(member, member))
    assert not is_dpartition_system(twice, skew=True)
