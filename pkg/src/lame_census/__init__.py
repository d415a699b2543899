"""Exact census of integral Lame equations with dihedral projective monodromy."""

__version__ = "0.1.0"
