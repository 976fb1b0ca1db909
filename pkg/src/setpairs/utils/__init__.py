"""
Utilities - seeded random instances
"""

from .random_systems import RandomSystemGenerator

__all__ = ["RandomSystemGenerator"]
