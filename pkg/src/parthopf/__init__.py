"""Finite-dimensional Hopf algebras by structure constants, partial (co)actions,
partial matched pairs and their bismash products, all in exact arithmetic."""

__version__ = "0.1.0"
