"""Exact-arithmetic toolkit for Markov triples and their q- and t-deformations."""

__version__ = "0.1.0"
