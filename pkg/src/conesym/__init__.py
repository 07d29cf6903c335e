"""Automorphism groups and normal forms of rational cones and polytopes."""

__version__ = "0.1.0"
