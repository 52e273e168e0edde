# -*- coding: utf-8 -*-
"""Statevector evaluation of QHC gates.

Measurement is exact: outcomes are reported as probabilities over the
computational basis, never sampled.
"""
from dataclasses import dataclass
import enum
from typing import Optional, Tuple

import numpy as np

from qhc_gates.exceptions import DimensionError, InvalidParameter, NonUnitaryError
from qhc_gates.linalg import CROSS_FORM_TOLERANCE, ComplexMatrix, unitarity_defect
from qhc_gates.utils import check_finite, index_to_label

NORM_TOLERANCE = 1e-10
#: Basis-state detection threshold on probability.
DECODE_TOLERANCE = 1e-6


class StateVector:
    """Normalized amplitude vector over the computational basis."""

    __slots__ = ("_amplitudes",)

    def __init__(self, amplitudes):
        array = np.array(amplitudes, dtype=complex)
        if array.ndim != 1 or array.size < 1:
            raise DimensionError(f"a state vector must be one-dimensional and non-empty, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InvalidParameter("amplitudes must be finite")
        norm = float(np.sum(np.abs(array) ** 2))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidParameter(f"state is not normalized: Σ|a|² = {norm!r}")
        array.setflags(write=False)
        self._amplitudes = array

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def dim(self) -> int:
        return self._amplitudes.size

    @property
    def qubits(self) -> int:
        return (self.dim - 1).bit_length()

    def probabilities(self) -> np.ndarray:
        return np.abs(self._amplitudes) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self._amplitudes))

    def __repr__(self):
        return f"StateVector(dim={self.dim})"


class OutcomeKind(enum.Enum):
    Basis = "basis"
    Superposed = "superposed"


@dataclass(frozen=True)
class DecodedOutcome:
    """Result of reading a state in the computational basis.

    ``label`` is set only for ``Basis`` outcomes; ``probabilities`` is always the
    full distribution, indexed by basis state.
    """

    kind: OutcomeKind
    probabilities: Tuple[float, ...]
    label: Optional[str] = None

    def as_dict(self):
        data = {"kind": self.kind.value, "probabilities": list(self.probabilities)}
        if self.label is not None:
            data["label"] = self.label
        return data


def initial_state(output_qubits: int) -> StateVector:
    if output_qubits < 1:
        raise DimensionError(f"need at least one qubit, got {output_qubits}")
    amplitudes = np.zeros(2**output_qubits, dtype=complex)
    amplitudes[0] = 1.0
    return StateVector(amplitudes)


def apply(u: ComplexMatrix, psi: StateVector) -> StateVector:
    if u.dim != psi.dim:
        raise DimensionError(f"cannot apply a {u.dim}-dimensional unitary to a {psi.dim}-dimensional state")
    defect = unitarity_defect(u)
    if defect > CROSS_FORM_TOLERANCE:
        raise NonUnitaryError(f"unitarity defect {defect:.3e} exceeds {CROSS_FORM_TOLERANCE:.0e}")
    return StateVector(u.entries @ psi.amplitudes)


def decode(psi: StateVector, tolerance: float = DECODE_TOLERANCE) -> DecodedOutcome:
    probabilities = psi.probabilities()
    best = int(np.argmax(probabilities))
    probabilities = tuple(float(p) for p in probabilities)
    if probabilities[best] >= 1.0 - tolerance:
        return DecodedOutcome(
            kind=OutcomeKind.Basis,
            probabilities=probabilities,
            label=index_to_label(best, psi.qubits),
        )
    return DecodedOutcome(kind=OutcomeKind.Superposed, probabilities=probabilities)


def evaluate_continuous(gate, inputs, tolerance: float = DECODE_TOLERANCE) -> DecodedOutcome:
    """Apply ``U(Σ inputs)`` of a synthesized gate to |0…0⟩ and decode.

    Inputs may be arbitrary reals; Boolean inputs reproduce the truth table.
    """
    inputs = tuple(inputs)
    if len(inputs) != gate.input_count:
        raise InvalidParameter(f"gate takes {gate.input_count} inputs, got {len(inputs)}")
    check_finite(**{f"inputs[{i}]": value for i, value in enumerate(inputs)})
    psi = apply(gate.unitary(float(sum(inputs))), initial_state(gate.output_qubits))
    return decode(psi, tolerance)
