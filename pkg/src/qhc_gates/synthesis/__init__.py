# -*- coding: utf-8 -*-
"""QHC gate synthesis from truth tables."""

from .qhc import (
    MAX_OUTPUT_QUBITS,
    CyclePermutation,
    QhcGate,
    SymmetryProfile,
    TruthTable,
    VerificationReport,
    VerificationRow,
    analyze_symmetry,
    find_cycle,
    missing_input_diagnostics,
    qubit_count,
    synthesize,
    verify,
)

__all__ = [
    "MAX_OUTPUT_QUBITS",
    "CyclePermutation",
    "QhcGate",
    "SymmetryProfile",
    "TruthTable",
    "VerificationReport",
    "VerificationRow",
    "analyze_symmetry",
    "find_cycle",
    "missing_input_diagnostics",
    "qubit_count",
    "synthesize",
    "verify",
]
