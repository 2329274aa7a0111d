"""Frobenius manifolds: exact identity checks, duality, monodromy, expansions."""

__version__ = "0.1.0"
