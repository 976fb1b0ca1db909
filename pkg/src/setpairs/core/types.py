"""
Core data types - ground sets, subset masks, set-pair systems and d-partition systems

Subsets of the ground set [n] = {1, ..., n} are stored as integer bit masks:
bit j-1 is set iff element j belongs to the subset. All I/O uses 1-based
element labels; masks never leave the package.
"""

from collections.abc import Iterable, Iterator
from typing import Any, NewType

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Fixed-width mask capacity
MAX_GROUND_SIZE = 64

# Opaque subset representation (0-based bit positions, 1-based labels)
SubsetMask = NewType("SubsetMask", int)


def full_mask(n: int) -> SubsetMask:
    """Mask of the whole ground set [n]"""
    return SubsetMask((1 << n) - 1)


def mask_of(elements: Iterable[int]) -> SubsetMask:
    """
    Build a mask from 1-based element labels

    Raises:
        ValueError: If a label is outside 1..MAX_GROUND_SIZE
    """
    mask = 0
    for element in elements:
        if not 1 <= element <= MAX_GROUND_SIZE:
            raise ValueError(f"Element {element} outside 1..{MAX_GROUND_SIZE}")
        mask |= 1 << (element - 1)
    return SubsetMask(mask)


def elements_of(mask: int) -> list[int]:
    """1-based labels of a mask, ascending"""
    return [bit + 1 for bit in iter_bits(mask)]


def iter_bits(mask: int) -> Iterator[int]:
    """0-based positions of the set bits, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def fits(mask: int, n: int) -> bool:
    """True iff the mask only uses the low n positions"""
    return mask >= 0 and mask >> n == 0


class SetPair(BaseModel):
    """
    One (A, B) pair of subsets

    Disjointness is NOT intrinsic: t-systems allow |A ∩ B| <= t. The system
    verifiers decide which variant is required.
    """

    a: int = Field(..., ge=0, description="Mask of A")
    b: int = Field(..., ge=0, description="Mask of B")

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_elements(cls, a: Iterable[int], b: Iterable[int]) -> "SetPair":
        return cls(a=mask_of(a), b=mask_of(b))

    @property
    def size_a(self) -> int:
        return self.a.bit_count()

    @property
    def size_b(self) -> int:
        return self.b.bit_count()

    def is_full(self, n: int) -> bool:
        """B = [n] \\ A"""
        return self.a & self.b == 0 and self.a | self.b == full_mask(n)

    def to_json(self) -> dict[str, list[int]]:
        return {"A": elements_of(self.a), "B": elements_of(self.b)}


class SetPairSystem(BaseModel):
    """
    Ordered sequence of (A_i, B_i) pairs over [n]

    Order matters: the skew conditions quantify over i < j. Duplicates are
    representable and rejected by the verifiers, not here.
    """

    n: int = Field(..., ge=0, le=MAX_GROUND_SIZE, description="Ground set size")
    pairs: tuple[SetPair, ...] = Field(default=(), description="Pairs in order")

    @model_validator(mode="after")
    def validate_ground(self) -> "SetPairSystem":
        """All masks must fit within [n]"""
        for index, pair in enumerate(self.pairs):
            if not (fits(pair.a, self.n) and fits(pair.b, self.n)):
                raise ValueError(
                    f"Pair {index + 1} uses elements outside [{self.n}]: "
                    f"A={elements_of(pair.a)}, B={elements_of(pair.b)}"
                )
        return self

    model_config = ConfigDict(frozen=True)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return len(self.pairs)

    def masks(self) -> list[tuple[int, int]]:
        """Raw (A, B) masks for hot loops"""
        return [(pair.a, pair.b) for pair in self.pairs]

    def with_pairs(self, pairs: Iterable[SetPair]) -> "SetPairSystem":
        return SetPairSystem(n=self.n, pairs=tuple(pairs))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[tuple[int, int]]) -> "SetPairSystem":
        return cls(n=n, pairs=tuple(SetPair(a=a, b=b) for a, b in masks))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "SetPairSystem":
        """
        Parse {"n": 3, "pairs": [{"A": [1, 2], "B": [3]}, ...]}

        Raises:
            ValueError / KeyError / pydantic ValidationError on malformed input
        """
        pairs = tuple(
            SetPair.from_elements(entry.get("A", []), entry.get("B", []))
            for entry in data.get("pairs", [])
        )
        return cls(n=data["n"], pairs=pairs)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "pairs": [pair.to_json() for pair in self.pairs]}


class DPartition(BaseModel):
    """
    Ordered tuple of d pairwise disjoint subsets (F^(1), ..., F^(d))

    Unlike SetPair, disjointness IS intrinsic here.
    """

    blocks: tuple[int, ...] = Field(..., min_length=1, description="Block masks in order")

    @model_validator(mode="after")
    def validate_disjoint(self) -> "DPartition":
        seen = 0
        for index, block in enumerate(self.blocks):
            if block < 0:
                raise ValueError(f"Block {index + 1} has a negative mask")
            if block & seen:
                raise ValueError(
                    f"Block {index + 1} overlaps an earlier block on {elements_of(block & seen)}"
                )
            seen |= block
        return self

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_elements(cls, blocks: Iterable[Iterable[int]]) -> "DPartition":
        return cls(blocks=tuple(mask_of(block) for block in blocks))

    @property
    def d(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(block.bit_count() for block in self.blocks)

    @property
    def support(self) -> int:
        union = 0
        for block in self.blocks:
            union |= block
        return union

    def is_full(self, n: int) -> bool:
        """Blocks cover [n]"""
        return self.support == full_mask(n)

    def to_json(self) -> dict[str, list[list[int]]]:
        return {"blocks": [elements_of(block) for block in self.blocks]}


class DPartitionSystem(BaseModel):
    """
    Ordered sequence of d-partitions of [n] with a uniform block count d
    """

    n: int = Field(..., ge=0, le=MAX_GROUND_SIZE, description="Ground set size")
    d: int = Field(..., ge=1, description="Blocks per member")
    members: tuple[DPartition, ...] = Field(default=(), description="Members in order")

    @model_validator(mode="after")
    def validate_members(self) -> "DPartitionSystem":
        for index, member in enumerate(self.members):
            if member.d != self.d:
                raise ValueError(f"Member {index + 1} has {member.d} blocks, expected {self.d}")
            if not fits(member.support, self.n):
                raise ValueError(f"Member {index + 1} uses elements outside [{self.n}]")
        return self

    model_config = ConfigDict(frozen=True)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def m(self) -> int:
        return len(self.members)

    def with_members(self, members: Iterable[DPartition]) -> "DPartitionSystem":
        return DPartitionSystem(n=self.n, d=self.d, members=tuple(members))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "DPartitionSystem":
        """
        Parse {"n": 3, "d": 3, "members": [{"blocks": [[1], [2], [3]]}, ...]}

        "d" may be omitted when at least one member is present.
        """
        members = tuple(
            DPartition.from_elements(entry["blocks"]) for entry in data.get("members", [])
        )
        d = data.get("d")
        if d is None:
            if not members:
                raise ValueError("Empty d-partition system needs an explicit 'd'")
            d = members[0].d
        return cls(n=data["n"], d=d, members=members)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "members": [member.to_json() for member in self.members],
        }
