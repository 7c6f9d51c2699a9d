"""Exact computation with finite linear categories over Q and F_p:
structure-constant categories, coverings and their Galois theory, group
gradings with smash products, first Hochschild-Mitchell cohomology, and
fundamental groups of quiver presentations."""

__version__ = "0.1.0"
