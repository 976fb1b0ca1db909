"""
setpairs - Bollobás-type set-pair systems: verifiers, extremal constructions,
exterior-algebra certificates and exhaustive search
"""

__version__ = "0.1.0"
