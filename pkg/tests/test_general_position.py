"""
Tests for general position sampling, reduction to t = 0 and projections
"""

import numpy as np
import pytest

from setpairs.constructions import t_system_construction
from setpairs.core.error_types import GeneralPositionError, ValidationError
from setpairs.core.types import SetPair, SetPairSystem
from setpairs.exterior import (
    PrimeField,
    Subspace,
    intersection_dim,
    lift_set_system,
    project_pairs,
    random_general_position_subspace,
    reduce_to_zero,
)
from setpairs.utils import RandomSystemGenerator

FIELD = PrimeField()


def test_no_constraints_and_zero_codim_gives_full_space():
    rng = np.random.default_rng(0)
    result = random_general_position_subspace([], 0, FIELD, rng, ambient=3)
    assert result == Subspace.full(3, FIELD.p)


def test_line_avoids_a_coordinate_axis():
    rng = np.random.default_rng(1)
    axis = Subspace.coordinate(0b01, 2, FIELD.p)
    line = random_general_position_subspace([axis], 1, FIELD, rng)
    assert line.dim == 1
    assert intersection_dim(axis, line) == 0


def test_random_planes_meet_a_hyperplane_in_lines():
    rng = np.random.default_rng(2)
    generator = RandomSystemGenerator(seed=2)
    planes = [generator.random_subspace(4, 2, FIELD) for _ in range(10)]
    hyperplane = random_general_position_subspace(planes, 1, FIELD, rng)
    assert hyperplane.dim == 3
    assert all(intersection_dim(plane, hyperplane) == 1 for plane in planes)


def test_full_space_constraints_are_vacuous():
    rng = np.random.default_rng(3)
    full = Subspace.full(3, FIELD.p)
    result = random_general_position_subspace([full], 2, FIELD, rng)
    assert result.dim == 1


def test_sampler_reports_violated_constraints():
    """Over GF(2) every line of the plane is one of the three constraints"""
    field = PrimeField(2)
    lines = [Subspace.span([v], 2, 2) for v in [(1, 0), (0, 1), (1, 1)]]
    with pytest.raises(GeneralPositionError) as exc_info:
        random_general_position_subspace(lines, 1, field, np.random.default_rng(0), max_tries=3)
    assert exc_info.value.tries == 3
    assert exc_info.value.context["tries"] == 3


def test_sampler_preconditions():
    rng = np.random.default_rng(0)
    with pytest.raises(ValidationError):
        random_general_position_subspace([], 1, FIELD, rng)
    with pytest.raises(ValidationError):
        random_general_position_subspace([Subspace.zero(2, FIELD.p)], 3, FIELD, rng)


@pytest.mark.slow
def test_general_position_battery():
    """200 seeded trials (n <= 5, t <= 2, m <= 20): >= 99% succeed within 5 tries, all audited"""
    successes = 0
    for seed in range(200):
        generator = RandomSystemGenerator(seed=seed)
        n = 2 + seed % 4
        t = seed % 3
        m = 1 + seed % 20
        constraints = generator.random_constraints(n, m, FIELD)
        try:
            result = random_general_position_subspace(constraints, t, FIELD, generator.rng, max_tries=5)
        except GeneralPositionError:
            continue
        successes += 1
        assert result.dim == n - t
        for w in constraints:
            assert intersection_dim(w, result) == max(w.dim - t, 0)
    assert successes >= 198


def test_reduce_to_zero_is_identity_at_t0():
    pairs = lift_set_system(t_system_construction(3, 0), FIELD)
    assert reduce_to_zero(pairs, 0, FIELD, np.random.default_rng(0)) == pairs


def test_reduce_to_zero_on_small_t_system():
    pairs = lift_set_system(t_system_construction(2, 1), FIELD)
    reduced = reduce_to_zero(pairs, 1, FIELD, np.random.default_rng(4))
    assert len(reduced) == 2
    assert all(u.ambient == 1 and v.ambient == 1 for u, v in reduced)
    assert all(intersection_dim(u, v) == 0 for u, v in reduced)
    assert intersection_dim(reduced[0][0], reduced[1][1]) > 0


def test_reduce_to_zero_keeps_cross_intersections():
    pairs = lift_set_system(t_system_construction(4, 2), FIELD)
    reduced = reduce_to_zero(pairs, 2, FIELD, np.random.default_rng(5))
    for j in range(len(pairs)):
        for i in range(j):
            before = intersection_dim(pairs[i][0], pairs[j][1])
            assert intersection_dim(reduced[i][0], reduced[j][1]) == max(before - 2, 0)


def test_reduce_to_zero_rejects_large_diagonals():
    system = SetPairSystem(n=3, pairs=(SetPair.from_elements([1, 2], [1, 2]),))
    with pytest.raises(ValidationError):
        reduce_to_zero(lift_set_system(system, FIELD), 1, FIELD, np.random.default_rng(0))


def test_project_pairs_preserves_the_system():
    system = SetPairSystem(
        n=4,
        pairs=(SetPair.from_elements([1], [2]), SetPair.from_elements([2], [1])),
    )
    pairs = lift_set_system(system, FIELD)
    projected = project_pairs(pairs, 2, FIELD, np.random.default_rng(6))
    assert all(u.ambient == 2 and u.dim == 1 and v.dim == 1 for u, v in projected)
    assert all(intersection_dim(u, v) == 0 for u, v in projected)
    assert intersection_dim(projected[0][0], projected[1][1]) == 1


def test_project_pairs_rejects_small_targets():
    system = SetPairSystem(n=4, pairs=(SetPair.from_elements([1, 2], [3]),))
    with pytest.raises(ValidationError):
        project_pairs(lift_set_system(system, FIELD), 2, FIELD, np.random.default_rng(0))
