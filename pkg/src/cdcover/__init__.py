"""Coprime-disjoint congruence sets: exact densities, constructions and search."""

__version__ = "0.1.0"
