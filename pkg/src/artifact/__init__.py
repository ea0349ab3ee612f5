"""Exact verification of the finite computations behind 3-subgroups of birational automorphism groups of Severi-Brauer surfaces."""

__version__ = "0.1.0"
