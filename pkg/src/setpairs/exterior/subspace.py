"""
Subspaces of GF(p)^n in canonical (reduced row echelon) form
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..core.error_types import AmbientMismatchError, ResourceCapError
from ..core.types import SetPairSystem, iter_bits
from .field import PrimeField, Vec, nullspace, rank, row_reduce

# Certificates run dense algebra over 2^n coordinates
MAX_LIFT_GROUND = 20


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of GF(p)^ambient

    The basis is the nonzero part of the reduced row echelon form, so equal
    subspaces have equal bases and subspace_wedge is deterministic.
    """

    ambient: int
    basis: tuple[Vec, ...]
    p: int
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient: int, p: int) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise AmbientMismatchError("Vector length differs from ambient", len(row), ambient)
        reduced, pivots = row_reduce(rows, ambient, p)
        return cls(ambient=ambient, basis=tuple(reduced), p=p, pivots=tuple(pivots))

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient=ambient, basis=(), p=p, pivots=())

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls.coordinate((1 << ambient) - 1, ambient, p)

    @classmethod
    def coordinate(cls, mask: int, ambient: int, p: int) -> "Subspace":
        """span{e_j : bit j-1 of mask set}"""
        basis = []
        for bit in iter_bits(mask):
            row = [0] * ambient
            row[bit] = 1
            basis.append(tuple(row))
        return cls(ambient=ambient, basis=tuple(basis), p=p, pivots=tuple(iter_bits(mask)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatchError("Subspaces live in different ambients", self.ambient, other.ambient)
        if self.p != other.p:
            raise AmbientMismatchError("Subspaces live over different fields", self.p, other.p)

    def join(self, other: "Subspace") -> "Subspace":
        """U + V"""
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient, self.p)

    def meet(self, other: "Subspace") -> "Subspace":
        """
        U ∩ V via the kernel of [U; V]^T: c with sum c_i u_i = -sum c'_j v_j
        """
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient, self.p)
        stacked = self.basis + other.basis
        transposed = [tuple(row[col] for row in stacked) for col in range(self.ambient)]
        k = self.dim
        vectors = []
        for coeffs in nullspace(transposed, len(stacked), self.p):
            vector = [0] * self.ambient
            for c, row in zip(coeffs[:k], self.basis, strict=True):
                if c:
                    vector = [(x + c * y) % self.p for x, y in zip(vector, row, strict=True)]
            vectors.append(vector)
        return Subspace.span(vectors, self.ambient, self.p)

    def contains(self, vector: Sequence[int]) -> bool:
        return rank(self.basis + (tuple(vector),), self.ambient, self.p) == self.dim

    def coordinates_in(self, frame: "Subspace") -> "Subspace":
        """
        Re-express a subspace of `frame` in frame's RREF coordinates

        For v in frame, v = sum_k v[pivot_k] * frame.basis[k].
        """
        self._check(frame)
        vectors = [tuple(row[pivot] for pivot in frame.pivots) for row in self.basis]
        return Subspace.span(vectors, frame.dim, self.p)


def intersection_dim(u: Subspace, v: Subspace) -> int:
    """
    dim U + dim V - dim(U + V), from the rank of the stacked bases
    """
    u._check(v)
    return u.dim + v.dim - rank(u.basis + v.basis, u.ambient, u.p)


def lift_set_system(
    system: SetPairSystem, field: PrimeField | None = None
) -> list[tuple[Subspace, Subspace]]:
    """
    (A_i, B_i) -> (span{e_j : j ∈ A_i}, span{e_j : j ∈ B_i})

    intersection_dim of the images equals |A_i ∩ B_j| for every cell.

    Raises:
        ResourceCapError: If n > 20
    """
    if system.n > MAX_LIFT_GROUND:
        raise ResourceCapError("Lifting is capped for 2^n-coordinate certificates", MAX_LIFT_GROUND, system.n)
    p = (field or PrimeField()).p
    return [
        (Subspace.coordinate(a, system.n, p), Subspace.coordinate(b, system.n, p))
        for a, b in system.masks()
    ]
