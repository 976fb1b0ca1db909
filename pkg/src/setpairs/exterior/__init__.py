"""
Exterior algebra over GF(p) - subspaces, wedges, general position, certificates
"""

from .certificates import (
    Certificate,
    certify_skew_system,
    certify_uniform_system,
    triangular_independence,
    wedge_pattern,
    wedge_rank,
)
from .field import PrimeField, dense_rank, nullspace, rank, row_reduce
from .general_position import project_pairs, random_general_position_subspace, reduce_to_zero
from .multivector import MultiVector, subspace_wedge, trivial_intersection, wedge, wedge_sign
from .subspace import Subspace, intersection_dim, lift_set_system

__all__ = [
    # Field
    "PrimeField",
    "row_reduce",
    "rank",
    "nullspace",
    "dense_rank",
    # Subspaces
    "Subspace",
    "intersection_dim",
    "lift_set_system",
    # Multivectors
    "MultiVector",
    "wedge",
    "wedge_sign",
    "subspace_wedge",
    "trivial_intersection",
    # General position
    "random_general_position_subspace",
    "reduce_to_zero",
    "project_pairs",
    # Certificates
    "Certificate",
    "wedge_pattern",
    "wedge_rank",
    "triangular_independence",
    "certify_skew_system",
    "certify_uniform_system",
]
