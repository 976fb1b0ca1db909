"""
Constructions - extremal systems and the saturation move
"""

from .partitions import (
    all_full_dpartitions,
    count_dpartitions,
    iter_dpartitions,
    lex_full_dpartitions,
    lex_key,
)
from .saturation import (
    SaturationStep,
    augmentation_gain,
    saturate,
    saturate_dpartitions,
    saturation_steps,
)
from .set_pairs import (
    full_power_set_system,
    furedi_construction,
    t_system_construction,
    valid_complement_ordering,
)

__all__ = [
    "full_power_set_system",
    "valid_complement_ordering",
    "furedi_construction",
    "t_system_construction",
    "iter_dpartitions",
    "count_dpartitions",
    "lex_key",
    "lex_full_dpartitions",
    "all_full_dpartitions",
    "augmentation_gain",
    "SaturationStep",
    "saturation_steps",
    "saturate",
    "saturate_dpartitions",
]
