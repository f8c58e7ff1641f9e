"""Permutation classes: structure, enumeration, and growth rates."""

__version__ = "0.1.0"
