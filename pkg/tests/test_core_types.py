"""
Tests for core types and exact counting
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError as PydanticValidationError

from setpairs.core.counting import binomial, format_rational, multinomial, parse_rational
from setpairs.core.error_types import ErrorType, ValidationError
from setpairs.core.types import (
    DPartition,
    DPartitionSystem,
    SetPair,
    SetPairSystem,
    elements_of,
    fits,
    full_mask,
    iter_bits,
    mask_of,
)


def test_mask_round_trip_uses_one_based_labels():
    """Element j lives in bit j-1"""
    mask = mask_of([1, 3])
    assert mask == 0b101
    assert elements_of(mask) == [1, 3]
    assert list(iter_bits(mask)) == [0, 2]


def test_mask_of_rejects_out_of_range_labels():
    with pytest.raises(ValueError):
        mask_of([0])
    with pytest.raises(ValueError):
        mask_of([65])


def test_full_mask_and_fits():
    assert full_mask(0) == 0
    assert full_mask(3) == 0b111
    assert fits(0b111, 3)
    assert not fits(0b1000, 3)


def test_set_pair_need_not_be_disjoint():
    """t-systems allow |A ∩ B| <= t, so disjointness is not intrinsic"""
    pair = SetPair.from_elements([1, 2], [2, 3])
    assert pair.size_a == 2
    assert pair.size_b == 2
    assert not pair.is_full(3)
    assert pair.to_json() == {"A": [1, 2], "B": [2, 3]}


def test_set_pair_is_full():
    assert SetPair.from_elements([1], [2, 3]).is_full(3)
    assert not SetPair.from_elements([1], [2]).is_full(3)


def test_system_rejects_masks_outside_ground():
    """All masks must fit within [n]"""
    with pytest.raises(PydanticValidationError) as exc_info:
        SetPairSystem(n=2, pairs=(SetPair.from_elements([3], []),))
    assert "outside [2]" in str(exc_info.value)


def test_system_rejects_ground_above_64():
    with pytest.raises(PydanticValidationError):
        SetPairSystem(n=65)


def test_system_json_round_trip():
    data = {"n": 3, "pairs": [{"A": [1, 2], "B": [3]}, {"A": [], "B": [1, 2, 3]}]}
    system = SetPairSystem.from_json(data)
    assert len(system) == 2
    assert system.masks() == [(0b011, 0b100), (0, 0b111)]
    assert system.to_json() == data


def test_system_is_immutable():
    system = SetPairSystem(n=1)
    with pytest.raises(PydanticValidationError):
        system.n = 2  # type: ignore[misc]


def test_dpartition_blocks_must_be_disjoint():
    """Disjointness IS intrinsic for d-partitions"""
    with pytest.raises(PydanticValidationError) as exc_info:
        DPartition.from_elements([[1, 2], [2]])
    assert "overlaps" in str(exc_info.value)


def test_dpartition_properties():
    member = DPartition.from_elements([[1], [], [2, 3]])
    assert member.d == 3
    assert member.sizes == (1, 0, 2)
    assert member.support == 0b111
    assert member.is_full(3)
    assert member.to_json() == {"blocks": [[1], [], [2, 3]]}


def test_dpartition_system_uniform_d():
    with pytest.raises(PydanticValidationError):
        DPartitionSystem(
            n=2,
            d=2,
            members=(DPartition.from_elements([[1], [2]]), DPartition.from_elements([[1], [2], []])),
        )


def test_dpartition_system_infers_d():
    system = DPartitionSystem.from_json({"n": 2, "members": [{"blocks": [[1], [2]]}]})
    assert system.d == 2
    with pytest.raises(ValueError):
        DPartitionSystem.from_json({"n": 2, "members": []})


@pytest.mark.parametrize(
    ("n", "k", "expected"),
    [(4, 2, 6), (7, 0, 1), (30, 15, 155117520), (3, -1, 0), (3, 4, 0)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal_triangle():
    """Brute-force Pascal oracle"""
    row = [1]
    for n in range(31):
        assert [binomial(n, k) for k in range(n + 1)] == row
        row = [1] + [row[k] + row[k + 1] for k in range(len(row) - 1)] + [1]


def test_binomial_rejects_negative_n():
    with pytest.raises(ValidationError) as exc_info:
        binomial(-1, 0)
    assert exc_info.value.error_type is ErrorType.VALIDATION_ERROR


@pytest.mark.parametrize(
    ("parts", "expected"),
    [((1, 1, 1), 6), ((5,), 1), ((2, 2, 1), 30), ((), 1), ((0, 3), 1)],
)
def test_multinomial(parts, expected):
    assert multinomial(parts) == expected


def test_multinomial_rejects_negative_parts():
    with pytest.raises(ValidationError):
        multinomial([1, -1])


def test_rational_wire_format():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert parse_rational("4/1") == 4
    assert parse_rational(" 7/3 ") == Fraction(7, 3)
    with pytest.raises(ValidationError):
        parse_rational("one half")
