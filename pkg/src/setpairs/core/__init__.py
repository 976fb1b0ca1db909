"""
Core module - subset masks, systems, exact counting, weights, errors, settings
"""

from .config import DEFAULT_FIELD_PRIME, Settings, load_settings
from .counting import ExactRational, binomial, format_rational, multinomial, parse_rational
from .error_types import (
    AmbientMismatchError,
    ErrorType,
    GeneralPositionError,
    InvariantError,
    ParseError,
    ResourceCapError,
    SetPairError,
    ValidationError,
)
from .types import (
    MAX_GROUND_SIZE,
    DPartition,
    DPartitionSystem,
    SetPair,
    SetPairSystem,
    SubsetMask,
    elements_of,
    full_mask,
    mask_of,
)
from .weights import dweight, is_antichain, lym_weight, member_weight, pair_weight, weight

__all__ = [
    # Types
    "MAX_GROUND_SIZE",
    "SubsetMask",
    "SetPair",
    "SetPairSystem",
    "DPartition",
    "DPartitionSystem",
    "full_mask",
    "mask_of",
    "elements_of",
    # Counting
    "ExactRational",
    "binomial",
    "multinomial",
    "format_rational",
    "parse_rational",
    # Weights
    "pair_weight",
    "weight",
    "dweight",
    "member_weight",
    "is_antichain",
    "lym_weight",
    # Errors
    "ErrorType",
    "SetPairError",
    "ValidationError",
    "ParseError",
    "ResourceCapError",
    "AmbientMismatchError",
    "GeneralPositionError",
    "InvariantError",
    # Settings
    "DEFAULT_FIELD_PRIME",
    "Settings",
    "load_settings",
]
