"""Finite-section toolkit for Hankel and Toeplitz operators on weighted Fock spaces."""

__version__ = "0.1.0"
