"""
General position - Las Vegas sampling of subspaces and linear maps

A random subspace of codimension t meets a fixed W in dimension
max(dim W - t, 0) unless its coefficients hit a proper algebraic
hypersurface, which over GF(p) happens with probability O(m n / p). Every
sample is audited, so a returned subspace is always in general position.
"""

from collections.abc import Sequence

import numpy as np
from loguru import logger

from ..core.error_types import AmbientMismatchError, GeneralPositionError, InvariantError, ValidationError
from .field import PrimeField, Vec
from .subspace import Subspace, intersection_dim

SubspacePair = tuple[Subspace, Subspace]


def _common_ambient(subspaces: Sequence[Subspace], field: PrimeField) -> int:
    ambient = subspaces[0].ambient
    for subspace in subspaces:
        if subspace.ambient != ambient:
            raise AmbientMismatchError("Subspaces live in different ambients", ambient, subspace.ambient)
        if subspace.p != field.p:
            raise AmbientMismatchError("Subspace field differs from the sampling field", subspace.p, field.p)
    return ambient


def random_general_position_subspace(
    constraints: Sequence[Subspace],
    codim: int,
    field: PrimeField,
    rng: np.random.Generator,
    max_tries: int = 5,
    ambient: int | None = None,
) -> Subspace:
    """
    Random subspace V' of codimension `codim` with
    dim(W_i ∩ V') = max(dim W_i - codim, 0) for every constraint W_i

    Full-space constraints are vacuous (V' ⊆ W) and are skipped.

    Args:
        constraints: Subspaces W_i of a common ambient
        codim: t, with 0 <= t <= n
        field: Coefficient field
        rng: Caller-owned numpy Generator
        max_tries: Samples before giving up
        ambient: n, required when there are no constraints

    Raises:
        ValidationError: If codim is out of range or n is unknown
        GeneralPositionError: If every sample violated some constraint
    """
    if constraints:
        n = _common_ambient(constraints, field)
        if ambient is not None and ambient != n:
            raise AmbientMismatchError("Constraints differ from the requested ambient", n, ambient)
    elif ambient is None:
        raise ValidationError("Ambient dimension needed when there are no constraints", field="ambient")
    else:
        n = ambient
    if not 0 <= codim <= n:
        raise ValidationError(f"codim must satisfy 0 <= t <= n={n}, got {codim}", field="codim")
    if codim == 0:
        return Subspace.full(n, field.p)

    proper = [w for w in constraints if w.dim < n]
    k = n - codim
    violated: list[int] = []
    for attempt in range(1, max_tries + 1):
        candidate = Subspace.span(field.random_matrix(rng, k, n), n, field.p)
        if candidate.dim < k:
            logger.debug(f"general position: rank-deficient sample on try {attempt}")
            violated = []
            continue
        violated = [
            index
            for index, w in enumerate(proper)
            if intersection_dim(w, candidate) != max(w.dim - codim, 0)
        ]
        if not violated:
            if attempt > 1:
                logger.debug(f"general position: accepted sample on try {attempt}")
            return candidate
        logger.debug(f"general position: {len(violated)} constraints violated on try {attempt}")

    raise GeneralPositionError(
        f"No subspace of codimension {codim} in general position after {max_tries} tries "
        f"(p={field.p} may be too small for {len(proper)} constraints)",
        violated=violated,
        tries=max_tries,
    )


def _pair_ambient(pairs: Sequence[SubspacePair], field: PrimeField) -> int:
    return _common_ambient([s for pair in pairs for s in pair], field)


def reduce_to_zero(
    pairs: Sequence[SubspacePair],
    t: int,
    field: PrimeField,
    rng: np.random.Generator,
    max_tries: int = 5,
) -> list[SubspacePair]:
    """
    Cut a skew t-system of subspace pairs down to a skew 0-system

    Picks W0 of codimension t in general position to every U_i, V_i,
    U_i ∩ V_i and U_i ∩ V_j (i < j), and returns (U_i ∩ W0, V_i ∩ W0) in
    W0's own (n - t)-dimensional coordinates. Afterwards every diagonal
    intersection is zero and every cross intersection has dimension
    max(dim(U_i ∩ V_j) - t, 0).

    Raises:
        ValidationError: If some dim(U_i ∩ V_i) > t or t is out of range
        GeneralPositionError: Propagated from the sampler
        InvariantError: If the post-hoc audit fails
    """
    if not pairs:
        return []
    n = _pair_ambient(pairs, field)
    if not 0 <= t <= n:
        raise ValidationError(f"t must satisfy 0 <= t <= n={n}, got {t}", field="t")

    diagonals = [u.meet(v) for u, v in pairs]
    for index, common in enumerate(diagonals):
        if common.dim > t:
            raise ValidationError(
                f"dim(U_{index + 1} ∩ V_{index + 1}) = {common.dim} exceeds t = {t}",
                field="t",
                context={"i": index + 1},
            )
    if t == 0:
        return list(pairs)

    crosses = {
        (i, j): pairs[i][0].meet(pairs[j][1])
        for j in range(len(pairs))
        for i in range(j)
    }
    constraints: list[Subspace] = [s for pair in pairs for s in pair]
    constraints += diagonals
    constraints += crosses.values()
    unique = list(dict.fromkeys(constraints))

    w0 = random_general_position_subspace(unique, t, field, rng, max_tries, ambient=n)
    reduced = [(u.meet(w0).coordinates_in(w0), v.meet(w0).coordinates_in(w0)) for u, v in pairs]

    for index, (u, v) in enumerate(reduced):
        if intersection_dim(u, v) != 0:
            raise InvariantError("Reduction left a nonzero diagonal intersection", context={"i": index + 1})
    for (i, j), cross in crosses.items():
        if intersection_dim(reduced[i][0], reduced[j][1]) != max(cross.dim - t, 0):
            raise InvariantError(
                "Reduction changed a cross intersection", context={"i": i + 1, "j": j + 1}
            )
    logger.debug(f"reduce_to_zero: {len(pairs)} pairs, ambient {n} -> {n - t}")
    return reduced


def _apply(matrix: Sequence[Vec], subspace: Subspace, target_dim: int) -> Subspace:
    """Image of a subspace under x -> M x"""
    p = subspace.p
    images = [
        tuple(sum(m_row[c] * row[c] for c in range(subspace.ambient)) % p for m_row in matrix)
        for row in subspace.basis
    ]
    return Subspace.span(images, target_dim, p)


def project_pairs(
    pairs: Sequence[SubspacePair],
    target_dim: int,
    field: PrimeField,
    rng: np.random.Generator,
    max_tries: int = 5,
) -> list[SubspacePair]:
    """
    Push a skew 0-system through a random linear map onto GF(p)^target_dim

    The map must be injective on every U_i + V_i, so dimensions and trivial
    diagonal intersections survive; nonzero cross intersections survive
    because U_i ∩ V_j maps into π(U_i) ∩ π(V_j) injectively.

    Raises:
        ValidationError: If target_dim exceeds the ambient or some
            dim U_i + dim V_i exceeds target_dim
        GeneralPositionError: If every sampled map failed the audit
    """
    if not pairs:
        return []
    n = _pair_ambient(pairs, field)
    if not 0 <= target_dim <= n:
        raise ValidationError(f"target_dim must satisfy 0 <= k <= n={n}, got {target_dim}", field="target_dim")
    if target_dim == n:
        return list(pairs)
    for index, (u, v) in enumerate(pairs):
        if u.dim + v.dim > target_dim:
            raise ValidationError(
                f"dim U_{index + 1} + dim V_{index + 1} = {u.dim + v.dim} exceeds {target_dim}",
                field="target_dim",
            )

    crosses = [
        (i, j)
        for j in range(len(pairs))
        for i in range(j)
        if intersection_dim(pairs[i][0], pairs[j][1]) > 0
    ]
    violated: list[int] = []
    for attempt in range(1, max_tries + 1):
        matrix = field.random_matrix(rng, target_dim, n)
        projected = [(_apply(matrix, u, target_dim), _apply(matrix, v, target_dim)) for u, v in pairs]
        violated = [
            index
            for index, ((u, v), (pu, pv)) in enumerate(zip(pairs, projected, strict=True))
            if pu.dim != u.dim or pv.dim != v.dim or intersection_dim(pu, pv) != 0
        ]
        violated += [
            j for i, j in crosses if intersection_dim(projected[i][0], projected[j][1]) == 0
        ]
        if not violated:
            logger.debug(f"project_pairs: ambient {n} -> {target_dim} on try {attempt}")
            return projected
        logger.debug(f"project_pairs: {len(violated)} pairs violated on try {attempt}")

    raise GeneralPositionError(
        f"No projection onto dimension {target_dim} preserved the system after {max_tries} tries",
        violated=sorted(set(violated)),
        tries=max_tries,
    )
