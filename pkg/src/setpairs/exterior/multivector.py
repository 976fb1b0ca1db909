"""
Multivectors of the exterior algebra Λ(GF(p)^n)

The basis of Λ is {f_A : A ⊆ [n]}, indexed by the same bit masks as subsets,
so f_A ∧ f_B = 0 when A ∩ B ≠ ∅ and sign(A, B) f_{A ∪ B} otherwise.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from loguru import logger

from ..core.error_types import AmbientMismatchError, InvariantError
from .subspace import Subspace, intersection_dim


def wedge_sign(a: int, b: int) -> int:
    """(-1)^#{(x, y) : x ∈ A, y ∈ B, x > y}"""
    inversions = 0
    rest = b
    while rest:
        low = rest & -rest
        # elements of A above this element of B
        inversions += (a & ~((low << 1) - 1)).bit_count()
        rest ^= low
    return -1 if inversions & 1 else 1


@dataclass(frozen=True, eq=True)
class MultiVector:
    """
    Sparse element of Λ(GF(p)^n): mask -> nonzero coefficient in 1..p-1
    """

    n: int
    p: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {mask: c % self.p for mask, c in self.terms.items() if c % self.p}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def scalar(cls, value: int, n: int, p: int) -> "MultiVector":
        return cls(n=n, p=p, terms={0: value})

    @classmethod
    def basis(cls, mask: int, n: int, p: int, coefficient: int = 1) -> "MultiVector":
        """coefficient * f_A"""
        return cls(n=n, p=p, terms={mask: coefficient})

    @classmethod
    def vector(cls, coords: Sequence[int], p: int) -> "MultiVector":
        """Grade-1 element sum_j coords[j] f_{j+1}"""
        return cls(n=len(coords), p=p, terms={1 << j: c for j, c in enumerate(coords)})

    def _check(self, other: "MultiVector") -> None:
        if self.n != other.n:
            raise AmbientMismatchError("Multivectors live in different ambients", self.n, other.n)
        if self.p != other.p:
            raise AmbientMismatchError("Multivectors live over different fields", self.p, other.p)

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            terms[mask] = terms.get(mask, 0) + c
        return MultiVector(n=self.n, p=self.p, terms=terms)

    def __neg__(self) -> "MultiVector":
        return self.scale(-1)

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def scale(self, factor: int) -> "MultiVector":
        return MultiVector(
            n=self.n, p=self.p, terms={mask: c * factor for mask, c in self.terms.items()}
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mask: int) -> int:
        return self.terms.get(mask, 0)

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self.terms}

    def is_homogeneous(self, grade: int | None = None) -> bool:
        """All terms share one grade (the given one, if any); zero counts as homogeneous"""
        grades = self.grades()
        if grade is None:
            return len(grades) <= 1
        return grades <= {grade}

    def support(self) -> list[int]:
        return sorted(self.terms)


def wedge(u: MultiVector, v: MultiVector) -> MultiVector:
    """
    Bilinear extension of f_A ∧ f_B

    Raises:
        AmbientMismatchError: If u and v have different n or p
    """
    u._check(v)
    terms: dict[int, int] = {}
    for mask_a, c_a in u.terms.items():
        for mask_b, c_b in v.terms.items():
            if mask_a & mask_b:
                continue
            union = mask_a | mask_b
            terms[union] = (terms.get(union, 0) + wedge_sign(mask_a, mask_b) * c_a * c_b) % u.p
    return MultiVector(n=u.n, p=u.p, terms=terms)


def wedge_all(factors: Iterable[MultiVector], n: int, p: int) -> MultiVector:
    """Left-to-right wedge; the empty product is 1"""
    result = MultiVector.scalar(1, n, p)
    for factor in factors:
        result = wedge(result, factor)
    return result


def subspace_wedge(subspace: Subspace) -> MultiVector:
    """
    ∧T = t_1 ∧ ... ∧ t_k over the canonical RREF basis

    The coefficient of f_A is the k x k minor of the basis matrix on the
    columns A. The zero subspace gives 1 f_∅.
    """
    return wedge_all(
        (MultiVector.vector(row, subspace.p) for row in subspace.basis),
        subspace.ambient,
        subspace.p,
    )


def trivial_intersection(u: Subspace, v: Subspace) -> bool:
    """
    U ∩ V = {0}, decided by ∧U ∧ ∧V ≠ 0 and cross-checked against the
    rank formula dim U + dim V - dim(U + V) = 0

    Raises:
        AmbientMismatchError: If U and V live in different ambients
        InvariantError: If the two criteria disagree
    """
    by_wedge = not wedge(subspace_wedge(u), subspace_wedge(v)).is_zero
    by_rank = intersection_dim(u, v) == 0
    if by_wedge != by_rank:
        logger.warning(f"wedge criterion {by_wedge} vs rank criterion {by_rank} for dims {u.dim}, {v.dim}")
        raise InvariantError(
            "Wedge and rank criteria disagree on a trivial intersection",
            context={"wedge": by_wedge, "rank": by_rank, "ambient": u.ambient},
        )
    return by_wedge
