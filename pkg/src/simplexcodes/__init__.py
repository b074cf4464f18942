"""Quantum codes on the discrete simplex built from classical l1 codes."""

__version__ = "0.1.0"
