"""
Bound certificates - executable instances of the exterior-algebra argument

For a skew system of subspace pairs, u_i = ∧U_i and v_j = ∧V_j satisfy
u_i ∧ v_j ≠ 0 iff U_i ∩ V_j = {0}. The skew hypotheses make the m x m table
of these wedges triangular, so u_1, ..., u_m are linearly independent in
Λ(GF(p)^n) and m <= 2^n. Positive t is first reduced to t = 0 in an
ambient of dimension n - t; uniform systems additionally project to
dimension a + b and live in the grade-a component of dimension C(a+b, a).
"""

from collections.abc import Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.counting import binomial
from ..core.error_types import AmbientMismatchError, InvariantError, ResourceCapError, ValidationError
from .field import PrimeField, dense_rank
from .general_position import SubspacePair, project_pairs, reduce_to_zero
from .multivector import MultiVector, subspace_wedge, trivial_intersection, wedge
from .subspace import MAX_LIFT_GROUND, intersection_dim

Pattern = tuple[tuple[int, ...], ...]


def _is_triangular(pattern: Pattern, m: int) -> bool:
    if len(pattern) != m or any(len(row) != m for row in pattern):
        return False
    return all(
        pattern[i][j] == (1 if i == j else 0)
        for i in range(m)
        for j in range(i, m)
    )


class Certificate(BaseModel):
    """
    Evidence that a system of m subspace pairs obeys its size bound

    Attributes:
        m: Number of pairs
        ambient: Ambient dimension n of the input
        t: Intersection parameter
        reduced_ambient: Ambient after reduction (and projection)
        pattern: pattern[i][j] = 1 iff u_i ∧ v_j ≠ 0
        rank: Rank of the u_i as rows over the basis {f_A}
        bound: 2^(n-t), or C(a+b, a) for uniform certificates
        verdict: pattern triangular, rank = m, m <= bound (and homogeneous)
        field_modulus: p
        seed: Seed of the sampler, if any randomness was used
        violation: First (i, j) cell (1-based) breaking the hypotheses
        reason: Human-readable hypothesis failure
        grade: a, for uniform certificates
        homogeneous: Every u_i lies in the grade-a component
    """

    m: int = Field(..., ge=0)
    ambient: int = Field(..., ge=0)
    t: int = Field(0, ge=0)
    reduced_ambient: int = Field(..., ge=0)
    pattern: Pattern = ()
    rank: int = Field(0, ge=0)
    bound: int = Field(..., ge=1)
    verdict: bool
    field_modulus: int
    seed: int | None = None
    violation: tuple[int, int] | None = None
    reason: str | None = None
    grade: int | None = None
    homogeneous: bool | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_verdict(self) -> "Certificate":
        """verdict must be exactly the conjunction it summarizes"""
        expected = (
            self.violation is None
            and _is_triangular(self.pattern, self.m)
            and self.rank == self.m
            and self.m <= self.bound
            and self.homogeneous is not False
        )
        if self.verdict != expected:
            raise ValueError(f"verdict={self.verdict} contradicts the recorded evidence")
        return self

    def to_json(self) -> dict[str, object]:
        return self.model_dump(mode="json")


def wedge_pattern(vectors: Sequence[MultiVector], witnesses: Sequence[MultiVector]) -> Pattern:
    """pattern[i][j] = 1 iff vectors[i] ∧ witnesses[j] ≠ 0"""
    return tuple(
        tuple(0 if wedge(u, v).is_zero else 1 for v in witnesses)
        for u in vectors
    )


def wedge_rank(vectors: Sequence[MultiVector]) -> int:
    """
    Rank of the multivectors as rows over the basis {f_A}

    Only the columns some vector touches are materialized.
    """
    if not vectors:
        return 0
    p = vectors[0].p
    columns = sorted({mask for vector in vectors for mask in vector.terms})
    if not columns:
        return 0
    index = {mask: col for col, mask in enumerate(columns)}
    dtype: type = np.int64 if p < (1 << 31) else object
    matrix = np.zeros((len(vectors), len(columns)), dtype=dtype)
    for row, vector in enumerate(vectors):
        for mask, c in vector.terms.items():
            matrix[row, index[mask]] = c
    return dense_rank(matrix, p)


def triangular_independence(
    vectors: Sequence[MultiVector], witnesses: Sequence[MultiVector]
) -> bool:
    """
    Triangular criterion for linear independence

    With f(w, a) = w ∧ a: if f(vectors[i], witnesses[i]) ≠ 0 and
    f(vectors[i], witnesses[j]) = 0 for i < j, the vectors are independent.
    The rank is computed as well and must equal m.

    Raises:
        ValidationError: If the sequences differ in length
    """
    if len(vectors) != len(witnesses):
        raise ValidationError(
            f"{len(vectors)} vectors but {len(witnesses)} witnesses", field="witnesses"
        )
    m = len(vectors)
    if not _is_triangular(wedge_pattern(vectors, witnesses), m):
        return False
    return wedge_rank(vectors) == m


def _check_pairs(pairs: Sequence[SubspacePair], field: PrimeField, ambient: int | None) -> int:
    n = ambient if ambient is not None else (pairs[0][0].ambient if pairs else 0)
    for u, v in pairs:
        for s in (u, v):
            if s.ambient != n:
                raise AmbientMismatchError("Pairs live in different ambients", n, s.ambient)
            if s.p != field.p:
                raise AmbientMismatchError("Pair field differs from the certificate field", s.p, field.p)
    if n > MAX_LIFT_GROUND:
        raise ResourceCapError("Certificates are capped at ambient 20", MAX_LIFT_GROUND, n)
    return n


def _first_hypothesis_failure(pairs: Sequence[SubspacePair], t: int) -> tuple[int, int, str] | None:
    """First (i, j) (0-based) with dim(U_i ∩ V_i) > t or dim(U_i ∩ V_j) <= t for i < j"""
    for i, (u, v) in enumerate(pairs):
        ok = trivial_intersection(u, v) if t == 0 else intersection_dim(u, v) <= t
        if not ok:
            return i, i, f"dim(U_{i + 1} ∩ V_{i + 1}) exceeds {t}"
    for j in range(len(pairs)):
        for i in range(j):
            u, v = pairs[i][0], pairs[j][1]
            ok = not trivial_intersection(u, v) if t == 0 else intersection_dim(u, v) > t
            if not ok:
                return i, j, f"dim(U_{i + 1} ∩ V_{j + 1}) does not exceed {t}"
    return None


def _evidence(
    pairs: Sequence[SubspacePair], grade: int | None
) -> tuple[Pattern, int, bool | None]:
    vectors = [subspace_wedge(u) for u, _ in pairs]
    witnesses = [subspace_wedge(v) for _, v in pairs]
    pattern = wedge_pattern(vectors, witnesses)
    rank = wedge_rank(vectors)
    homogeneous = None if grade is None else all(u.is_homogeneous(grade) for u in vectors)
    return pattern, rank, homogeneous


def _failed(
    failure: tuple[int, int, str], m: int, n: int, t: int, bound: int, field: PrimeField, seed: int | None,
    grade: int | None = None,
) -> Certificate:
    i, j, reason = failure
    logger.debug(f"certificate: hypothesis fails at cell ({i + 1}, {j + 1})")
    return Certificate(
        m=m, ambient=n, t=t, reduced_ambient=n, bound=bound, verdict=False,
        field_modulus=field.p, seed=seed, violation=(i + 1, j + 1), reason=reason, grade=grade,
    )


def _sealed(
    m: int, n: int, t: int, reduced_ambient: int, pattern: Pattern, rank: int, bound: int,
    field: PrimeField, seed: int | None, grade: int | None = None, homogeneous: bool | None = None,
) -> Certificate:
    """Certificate for pairs whose hypotheses held; a failed verdict is a bug"""
    verdict = _is_triangular(pattern, m) and rank == m and m <= bound and homogeneous is not False
    certificate = Certificate(
        m=m, ambient=n, t=t, reduced_ambient=reduced_ambient, pattern=pattern, rank=rank,
        bound=bound, verdict=verdict, field_modulus=field.p, seed=seed, grade=grade,
        homogeneous=homogeneous,
    )
    if not verdict:
        logger.warning(f"certificate: hypotheses held but evidence failed: {certificate.to_json()}")
        raise InvariantError(
            "Triangular pattern, rank and bound disagree with the hypotheses",
            context={"m": m, "rank": rank, "bound": bound},
        )
    return certificate


def certify_skew_system(
    pairs: Sequence[SubspacePair],
    t: int = 0,
    field: PrimeField | None = None,
    rng: np.random.Generator | None = None,
    *,
    seed: int | None = None,
    max_tries: int = 5,
    ambient: int | None = None,
) -> Certificate:
    """
    Certify m <= 2^(n-t) for a skew t-system of subspace pairs

    Hypotheses that fail produce a certificate with verdict False and the
    offending cell; they are not exceptions.

    Args:
        pairs: (U_i, V_i) in a common ambient
        t: Intersection parameter
        field: Coefficient field (default: the pairs' field)
        rng: Sampler state for t > 0 (default: default_rng(seed))
        seed: Recorded in the certificate
        max_tries: Sampler retry cap
        ambient: n, required only for an empty system

    Raises:
        ResourceCapError: If n > 20
        GeneralPositionError: If the reduction could not be sampled
        InvariantError: If the hypotheses hold but the evidence does not
    """
    if field is None:
        field = PrimeField(pairs[0][0].p) if pairs else PrimeField()
    n = _check_pairs(pairs, field, ambient)
    if not 0 <= t <= n:
        raise ValidationError(f"t must satisfy 0 <= t <= n={n}, got {t}", field="t")
    m = len(pairs)
    bound = 2 ** (n - t)

    failure = _first_hypothesis_failure(pairs, t)
    if failure is not None:
        return _failed(failure, m, n, t, bound, field, seed)

    reduced = list(pairs)
    if t > 0:
        rng = rng if rng is not None else np.random.default_rng(seed)
        reduced = reduce_to_zero(pairs, t, field, rng, max_tries)
    pattern, rank, _ = _evidence(reduced, None)
    return _sealed(m, n, t, n - t, pattern, rank, bound, field, seed)


def certify_uniform_system(
    pairs: Sequence[SubspacePair],
    t: int = 0,
    field: PrimeField | None = None,
    rng: np.random.Generator | None = None,
    *,
    seed: int | None = None,
    max_tries: int = 5,
) -> Certificate:
    """
    Certify m <= C(a+b, a) for a uniform skew t-system

    Every U_i has dimension a + t and every V_i dimension b + t. After
    reduction to t = 0 and a random projection to dimension a + b, the
    wedges ∧U_i are independent elements of the grade-a component.

    Raises:
        ValidationError: If the system is empty or not uniform
        GeneralPositionError: If a reduction or projection could not be sampled
        InvariantError: If the hypotheses hold but the evidence does not
    """
    if not pairs:
        raise ValidationError("A uniform certificate needs at least one pair", field="pairs")
    if field is None:
        field = PrimeField(pairs[0][0].p)
    n = _check_pairs(pairs, field, None)
    a = pairs[0][0].dim - t
    b = pairs[0][1].dim - t
    if a < 0 or b < 0 or any(u.dim != a + t or v.dim != b + t for u, v in pairs):
        raise ValidationError(
            f"Uniform systems need dim U_i = a + t and dim V_i = b + t for all i (t={t})",
            field="pairs",
        )
    m = len(pairs)
    bound = binomial(a + b, a)

    failure = _first_hypothesis_failure(pairs, t)
    if failure is not None:
        return _failed(failure, m, n, t, bound, field, seed, grade=a)

    rng = rng if rng is not None else np.random.default_rng(seed)
    reduced = reduce_to_zero(pairs, t, field, rng, max_tries)
    if n - t > a + b:
        reduced = project_pairs(reduced, a + b, field, rng, max_tries)
    pattern, rank, homogeneous = _evidence(reduced, a)
    return _sealed(m, n, t, a + b, pattern, rank, bound, field, seed, grade=a, homogeneous=homogeneous)
