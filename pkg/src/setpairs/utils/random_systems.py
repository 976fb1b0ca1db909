"""
Random test data - skew systems, subspaces and power-set orders

Everything is drawn from one seeded numpy Generator, so a generator built
with the same seed replays the same data.
"""

import numpy as np

from ..core.types import SetPair, SetPairSystem
from ..exterior.field import PrimeField
from ..exterior.subspace import Subspace


class RandomSystemGenerator:
    """
    Seeded source of random instances for property tests and batteries
    """

    def __init__(self, seed: int = 42):
        self.rng = np.random.default_rng(seed)

    def random_pair(self, n: int, t: int = 0) -> SetPair:
        """
        Each element lands in A only, B only or neither; up to t elements
        are placed in both
        """
        labels = self.rng.integers(0, 3, size=n)
        a = sum(1 << x for x in range(n) if labels[x] == 0)
        b = sum(1 << x for x in range(n) if labels[x] == 1)
        if t and n:
            shared = self.rng.choice(n, size=int(self.rng.integers(0, min(t, n) + 1)), replace=False)
            for x in shared:
                a |= 1 << int(x)
                b |= 1 << int(x)
        return SetPair(a=a, b=b)

    def random_skew_system(self, n: int, attempts: int = 40, t: int = 0) -> SetPairSystem:
        """
        Greedy skew t-system: random pairs are appended whenever
        |A_i ∩ B_new| > t for every earlier i
        """
        pairs: list[SetPair] = []
        for _ in range(attempts):
            candidate = self.random_pair(n, t)
            if (candidate.a & candidate.b).bit_count() > t:
                continue
            if all((earlier.a & candidate.b).bit_count() > t for earlier in pairs):
                pairs.append(candidate)
        return SetPairSystem(n=n, pairs=tuple(pairs))

    def power_set_permutation(self, n: int) -> list[int]:
        """Uniformly random order of all 2^n masks"""
        return [int(mask) for mask in self.rng.permutation(1 << n)]

    def random_subspace(self, n: int, dim: int, field: PrimeField) -> Subspace:
        """Span of dim random vectors (dimension dim with probability ~1)"""
        return Subspace.span(field.random_matrix(self.rng, dim, n), n, field.p)

    def random_constraints(
        self, n: int, count: int, field: PrimeField, max_dim: int | None = None
    ) -> list[Subspace]:
        """Random proper subspaces of dimensions 0..max_dim (default n - 1)"""
        top = n - 1 if max_dim is None else max_dim
        dims = self.rng.integers(0, top + 1, size=count)
        return [self.random_subspace(n, int(dim), field) for dim in dims]

    def change_basis(self, subspace: Subspace, field: PrimeField) -> list[tuple[int, ...]]:
        """
        The basis rows of the subspace multiplied by a random invertible matrix
        """
        k = subspace.dim
        while True:
            matrix = field.random_matrix(self.rng, k, k)
            if Subspace.span(matrix, k, field.p).dim == k:
                break
        return [
            tuple(
                sum(matrix[r][s] * subspace.basis[s][c] for s in range(k)) % field.p
                for c in range(subspace.ambient)
            )
            for r in range(k)
        ]
