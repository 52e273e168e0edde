"""Quantum Hamiltonian Computing gates synthesized from truth tables."""

__version__ = "0.1.0"
