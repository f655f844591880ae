"""Exact checks and operations for discrete convex functions on the integer lattice."""

__version__ = "0.1.0"
