"""Exact finite computations around the Leech lattice, the Golay code,
A6 and the Hesse pencil, with a claim-by-claim verification runner."""

__version__ = "0.1.0"

__all__ = ["golay", "leech", "hyperbolic", "quadform", "permchar", "niemeier", "hesse", "claims", "cli"]
