"""
Tests for wedge patterns and bound certificates
"""

import numpy as np
import pytest
from pydantic import ValidationError as PydanticValidationError

from setpairs.constructions import full_power_set_system, furedi_construction, t_system_construction
from setpairs.core.counting import binomial
from setpairs.core.error_types import ValidationError
from setpairs.core.types import SetPair, SetPairSystem
from setpairs.exterior import (
    Certificate,
    MultiVector,
    PrimeField,
    Subspace,
    certify_skew_system,
    certify_uniform_system,
    lift_set_system,
    subspace_wedge,
    triangular_independence,
    wedge_rank,
)

FIELD = PrimeField()
P = FIELD.p


def f(*elements: int, n: int = 2) -> MultiVector:
    return MultiVector.basis(sum(1 << (e - 1) for e in elements), n, P)


# ----------------------------------------------------------------- triangular criterion


def test_triangular_independence_examples():
    assert triangular_independence([f(1), f(2)], [f(2), f(1)])
    assert triangular_independence([MultiVector.scalar(1, 0, P)], [MultiVector.scalar(1, 0, P)])


def test_triangular_independence_on_full_power_set():
    lifted = lift_set_system(full_power_set_system(2))
    vectors = [subspace_wedge(u) for u, _ in lifted]
    witnesses = [subspace_wedge(v) for _, v in lifted]
    assert triangular_independence(vectors, witnesses)
    assert wedge_rank(vectors) == 4


def test_triangular_independence_rejects_broken_patterns():
    # upper cell f1 ∧ f2 is nonzero
    assert not triangular_independence([f(1), f(1)], [f(2), f(2)])
    with pytest.raises(ValidationError):
        triangular_independence([f(1)], [])


def test_wedge_rank_of_dependent_vectors():
    assert wedge_rank([f(1), f(1) + f(2), f(2)]) == 2
    assert wedge_rank([]) == 0


# ----------------------------------------------------------------- skew certificates


def test_certify_full_power_set_n2():
    certificate = certify_skew_system(lift_set_system(full_power_set_system(2)), 0)
    assert certificate.verdict
    assert certificate.m == 4
    assert certificate.rank == 4
    assert certificate.bound == 4
    assert certificate.field_modulus == P


def test_certify_single_pair_with_zero_witness():
    w = Subspace.full(3, P)
    certificate = certify_skew_system([(w, Subspace.zero(3, P))], 0)
    assert certificate.verdict
    assert certificate.m == 1
    assert certificate.bound == 8


def test_certify_t_system_with_positive_t():
    pairs = lift_set_system(t_system_construction(3, 1))
    certificate = certify_skew_system(pairs, 1, seed=7)
    assert certificate.verdict
    assert certificate.m == 4
    assert certificate.bound == 4
    assert certificate.reduced_ambient == 2
    assert certificate.seed == 7


@pytest.mark.parametrize("p", [(1 << 61) - 1, (1 << 89) - 1])
def test_certify_over_large_primes(p):
    field = PrimeField(p)
    certificate = certify_skew_system(lift_set_system(full_power_set_system(2), field), 0, field)
    assert certificate.verdict
    assert certificate.field_modulus == p

    pairs = lift_set_system(t_system_construction(3, 1), field)
    certificate = certify_skew_system(pairs, 1, field, np.random.default_rng(3), seed=3)
    assert certificate.verdict
    assert certificate.reduced_ambient == 2


def test_certify_empty_system():
    certificate = certify_skew_system([], 0, ambient=3)
    assert certificate.verdict
    assert certificate.m == 0


def test_failed_certificate_reports_the_cell():
    # (∅,{1}) before ({1},∅) is not skew: A_1 ∩ B_2 = ∅
    system = SetPairSystem(n=1, pairs=(SetPair.from_elements([], [1]), SetPair.from_elements([1], [])))
    certificate = certify_skew_system(lift_set_system(system), 0)
    assert not certificate.verdict
    assert certificate.violation == (1, 2)
    assert certificate.reason is not None


def test_failed_certificate_on_diagonal():
    system = SetPairSystem(n=2, pairs=(SetPair.from_elements([1, 2], [1]),))
    certificate = certify_skew_system(lift_set_system(system), 0)
    assert not certificate.verdict
    assert certificate.violation == (1, 1)


def test_certificate_json_fields():
    data = certify_skew_system(lift_set_system(full_power_set_system(1)), 0, seed=3).to_json()
    assert data["pattern"] == [[1, 0], [1, 1]]
    assert data["verdict"] is True
    assert data["seed"] == 3
    assert {"rank", "bound", "field_modulus"} <= data.keys()


def test_certificate_rejects_inconsistent_verdict():
    with pytest.raises(PydanticValidationError):
        Certificate(m=1, ambient=1, reduced_ambient=1, pattern=((1,),), rank=0, bound=2, verdict=True, field_modulus=P)
    with pytest.raises(PydanticValidationError):
        Certificate(m=1, ambient=1, reduced_ambient=1, pattern=((1,),), rank=1, bound=2, verdict=False, field_modulus=P)


@pytest.mark.slow
def test_certificates_for_extremal_constructions():
    """Full power sets, t-systems and Füredi systems with n <= 6 certify over 20 seeds"""
    systems: list[tuple[SetPairSystem, int]] = [(full_power_set_system(n), 0) for n in range(7)]
    systems += [(t_system_construction(n, t), t) for n in range(7) for t in range(n + 1)]
    systems += [
        (furedi_construction(a, b, t), t)
        for a in range(5)
        for b in range(5)
        for t in range(5)
        if a + b + t <= 6
    ]
    for system, t in systems:
        pairs = lift_set_system(system, FIELD)
        seeds = range(20) if t else range(1)
        for seed in seeds:
            certificate = certify_skew_system(pairs, t, FIELD, np.random.default_rng(seed), seed=seed)
            assert certificate.verdict, (system.n, t, seed)
            assert certificate.rank == len(system)
            assert certificate.bound == 2 ** (system.n - t)


# ----------------------------------------------------------------- uniform certificates


def test_uniform_certificate_on_furedi():
    for a, b, t in [(1, 1, 0), (2, 1, 0), (1, 2, 1), (2, 2, 1)]:
        pairs = lift_set_system(furedi_construction(a, b, t), FIELD)
        certificate = certify_uniform_system(pairs, t, FIELD, np.random.default_rng(a + b + t), seed=a + b + t)
        assert certificate.verdict
        assert certificate.bound == binomial(a + b, a)
        assert certificate.m == certificate.bound
        assert certificate.grade == a
        assert certificate.homogeneous
        assert certificate.reduced_ambient == a + b


def test_uniform_certificate_projects_large_ambients():
    # two skew pairs of lines in GF(p)^4; the projection lands in dimension 2
    system = SetPairSystem(n=4, pairs=(SetPair.from_elements([1], [2]), SetPair.from_elements([2], [1])))
    certificate = certify_uniform_system(lift_set_system(system), 0, seed=1)
    assert certificate.verdict
    assert certificate.ambient == 4
    assert certificate.reduced_ambient == 2
    assert certificate.bound == 2


def test_uniform_certificate_rejects_mixed_dimensions():
    system = SetPairSystem(n=3, pairs=(SetPair.from_elements([1], [2]), SetPair.from_elements([2, 3], [1])))
    with pytest.raises(ValidationError):
        certify_uniform_system(lift_set_system(system), 0)
    with pytest.raises(ValidationError):
        certify_uniform_system([], 0)
