"""
Prime fields GF(p) and exact elimination over them

Vectors are tuples of ints in 0..p-1. Small matrices (subspace bases) use
pure-Python row reduction; wide wedge matrices use numpy int64 elimination,
which is exact while p < 2^31 (products stay below 2^62); larger primes fall
back to Python ints.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from sympy import isprime

from ..core.config import DEFAULT_FIELD_PRIME
from ..core.error_types import ValidationError

Vec = tuple[int, ...]

# numpy int64 sampling takes an exclusive upper bound of at most 2^63
INT64_SAMPLE_LIMIT = 1 << 63
UINT64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class PrimeField:
    """
    GF(p) for a prime p

    One large prime replaces both the infinite fields and the field
    extensions used by the general position arguments.
    """

    p: int = DEFAULT_FIELD_PRIME

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ValidationError(f"Field modulus {self.p} is not prime", field="p")

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(value, self.p - 2, self.p)

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> list[Vec]:
        """Uniform rows x cols matrix over GF(p)"""
        if rows == 0 or cols == 0:
            return [tuple([0] * cols) for _ in range(rows)]
        if self.p > INT64_SAMPLE_LIMIT:
            return [tuple(_uniform_below(rng, self.p) for _ in range(cols)) for _ in range(rows)]
        sample = rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)
        return [tuple(int(x) for x in row) for row in sample]


def _uniform_below(rng: np.random.Generator, bound: int) -> int:
    """Uniform int in 0..bound-1 from 64-bit words, by rejection"""
    words = -(-bound.bit_length() // 64)
    excess = words * 64 - bound.bit_length()
    while True:
        value = 0
        for word in rng.integers(0, UINT64_MAX, size=words, dtype=np.uint64, endpoint=True):
            value = (value << 64) | int(word)
        value >>= excess
        if value < bound:
            return value


def row_reduce(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[list[Vec], list[int]]:
    """
    Reduced row echelon form

    Returns:
        (nonzero rows in RREF ordered by pivot column, pivot columns)
    """
    matrix = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = pow(matrix[rank][col], p - 2, p)
        lead = [(x * inv) % p for x in matrix[rank]]
        matrix[rank] = lead
        for r in range(len(matrix)):
            factor = matrix[r][col]
            if r != rank and factor:
                matrix[r] = [(x - factor * y) % p for x, y in zip(matrix[r], lead, strict=True)]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return [tuple(row) for row in matrix[:rank]], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(row_reduce(rows, ncols, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[Vec]:
    """Basis of {x : rows · x = 0}"""
    reduced, pivots = row_reduce(rows, ncols, p)
    pivot_set = set(pivots)
    basis: list[Vec] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [0] * ncols
        vector[free] = 1
        for row, pivot in zip(reduced, pivots, strict=True):
            vector[pivot] = (-row[free]) % p
        basis.append(tuple(vector))
    return basis


def dense_rank(matrix: np.ndarray, p: int) -> int:
    """
    Rank of a dense matrix over GF(p) by Gaussian elimination in numpy

    int64 arithmetic for p < 2^31, Python objects otherwise.
    """
    if matrix.size == 0:
        return 0
    dtype: type = np.int64 if p < (1 << 31) else object
    work = np.array(matrix, dtype=dtype) % p
    n_rows, n_cols = work.shape
    rank_found = 0
    for col in range(n_cols):
        if rank_found == n_rows:
            break
        candidates = np.nonzero(work[rank_found:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank_found + int(candidates[0])
        if pivot != rank_found:
            work[[rank_found, pivot]] = work[[pivot, rank_found]]
        inv = pow(int(work[rank_found, col]), p - 2, p)
        work[rank_found] = (work[rank_found] * inv) % p
        below = work[rank_found + 1 :, col].copy()
        if below.any():
            work[rank_found + 1 :] = (
                work[rank_found + 1 :] - np.outer(below, work[rank_found]) % p
            ) % p
        rank_found += 1
    return rank_found
