"""Certified invariants of 2-simple complex tori: number fields, Galois transitivity, Hodge and Lie combinatorics."""

__version__ = "0.1.0"
