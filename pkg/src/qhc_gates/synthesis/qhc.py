# -*- coding: utf-8 -*-
"""Synthesis of QHC gates from symmetric truth tables.

A table whose outputs depend only on the input Hamming weight ``w`` is realized
by a single cycle permutation ``P`` with ``P^w |0…0⟩ = |t(x)⟩``. The gate is the
one-parameter family ``U(s) = exp(-isH)`` with ``H = i log P`` on the principal
branch, evaluated at ``s = Σ inputs``.
"""
from dataclasses import dataclass, field
import logging
from typing import Dict, Optional, Tuple

import numpy as np

from qhc_gates.exceptions import (
    InitialStateMismatch,
    InvalidOrbit,
    NonEmbeddable,
    NotSymmetric,
    ValidationError,
)
from qhc_gates.linalg import (
    MAX_DIM,
    ComplexMatrix,
    SpectralDecomposition,
    cycle_spectrum,
    exp_from_spectrum,
    permutation_matrix,
)
from qhc_gates.utils import bit_tuples, hamming_weight, index_to_label, is_bit_string, label_to_index

LOGGER = logging.getLogger(__name__)

#: Widest output register whose Hilbert space fits in ``MAX_DIM``.
MAX_OUTPUT_QUBITS = MAX_DIM.bit_length() - 1
#: Above this many inputs, absent rows are counted instead of listed.
MAX_LISTED_INPUTS = 10


def missing_input_diagnostics(seen, input_count):
    """Diagnostics for the ``input_count``-bit tuples absent from ``seen``."""
    # bit_length guard keeps 1 << input_count from being built for huge counts
    if len(seen).bit_length() == input_count + 1 and len(seen) == 1 << input_count:
        return []
    if input_count > MAX_LISTED_INPUTS:
        return [f"expected 2^{input_count} rows, got {len(seen)}"]
    return [f"input '{_shown(key)}' is missing" for key in bit_tuples(input_count) if key not in seen]


@dataclass(frozen=True)
class TruthTable:
    """Total mapping from ``input_count``-bit tuples to ``output_qubits``-bit labels."""

    input_count: int
    output_qubits: int
    rows: Dict[Tuple[int, ...], str]

    def __post_init__(self):
        diagnostics = []
        if not isinstance(self.input_count, int) or self.input_count < 1:
            raise ValidationError(f"input_count must be a positive integer, got {self.input_count!r}")
        if not isinstance(self.output_qubits, int) or self.output_qubits < 1:
            raise ValidationError(f"output_qubits must be a positive integer, got {self.output_qubits!r}")
        if self.output_qubits > MAX_OUTPUT_QUBITS:
            raise ValidationError(
                f"output_qubits {self.output_qubits} exceeds the {MAX_OUTPUT_QUBITS}-qubit limit"
            )
        rows = {}
        seen = set()
        for key, label in self.rows.items():
            key = tuple(key)
            if len(key) != self.input_count or any(b not in (0, 1) for b in key):
                diagnostics.append(f"input '{_shown(key)}' is not a {self.input_count}-bit tuple")
                continue
            seen.add(key)
            if not is_bit_string(label) or len(label) != self.output_qubits:
                diagnostics.append(
                    f"input '{_shown(key)}': output {label!r} is not a {self.output_qubits}-bit label"
                )
                continue
            rows[key] = label
        diagnostics.extend(missing_input_diagnostics(seen, self.input_count))
        if diagnostics:
            raise ValidationError("invalid truth table", diagnostics)
        object.__setattr__(self, "rows", dict(sorted(rows.items())))

    @classmethod
    def from_weight_outputs(cls, input_count, weight_outputs):
        """Symmetric table whose row ``x`` maps to ``weight_outputs[weight(x)]``."""
        weight_outputs = tuple(weight_outputs)
        if len(weight_outputs) != input_count + 1:
            raise ValidationError(
                f"need {input_count + 1} weight outputs for {input_count} inputs, got {len(weight_outputs)}"
            )
        return cls(
            input_count=input_count,
            output_qubits=len(weight_outputs[0]),
            rows={key: weight_outputs[hamming_weight(key)] for key in bit_tuples(input_count)},
        )

    def output(self, inputs) -> str:
        return self.rows[tuple(inputs)]

    def distinct_outputs(self):
        return sorted(set(self.rows.values()))


def _shown(key):
    return "".join(str(b) for b in key)


@dataclass(frozen=True)
class SymmetryProfile:
    is_symmetric: bool
    weight_outputs: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class CyclePermutation:
    """Cycle ``orbit[0] → orbit[1] → … → orbit[0]`` on a ``dim``-dimensional basis."""

    dim: int
    orbit: Tuple[int, ...]

    def __post_init__(self):
        orbit = tuple(int(i) for i in self.orbit)
        if not orbit or orbit[0] != 0:
            raise InvalidOrbit(f"a QHC cycle starts at the all-zeros state, got orbit {orbit}")
        if len(set(orbit)) != len(orbit) or any(not 0 <= i < self.dim for i in orbit):
            raise InvalidOrbit(f"orbit {orbit} is not a set of distinct indices below {self.dim}")
        object.__setattr__(self, "orbit", orbit)

    @property
    def length(self) -> int:
        return len(self.orbit)

    def matrix(self) -> ComplexMatrix:
        return permutation_matrix(self.orbit, self.dim)


@dataclass(frozen=True)
class QhcGate:
    """A synthesized gate: the cycle, its spectrum, and the family ``U(s)``."""

    cycle: CyclePermutation
    spectrum: SpectralDecomposition
    input_count: int

    @property
    def output_qubits(self) -> int:
        return (self.cycle.dim - 1).bit_length()

    @property
    def cycle_length(self) -> int:
        return self.cycle.length

    def unitary(self, s) -> ComplexMatrix:
        return exp_from_spectrum(self.spectrum, s)

    def generator(self) -> ComplexMatrix:
        return self.spectrum.generator()


@dataclass(frozen=True)
class VerificationRow:
    inputs: Tuple[int, ...]
    expected: str
    obtained: str
    deviation: float


@dataclass(frozen=True)
class VerificationReport:
    rows: Tuple[VerificationRow, ...]
    tolerance: float
    passed: bool = field(init=False)
    max_deviation: float = field(init=False)

    def __post_init__(self):
        max_deviation = max((row.deviation for row in self.rows), default=0.0)
        passed = all(row.obtained == row.expected and row.deviation <= self.tolerance for row in self.rows)
        object.__setattr__(self, "max_deviation", max_deviation)
        object.__setattr__(self, "passed", passed)

    @property
    def failures(self):
        return [
            row for row in self.rows if row.obtained != row.expected or row.deviation > self.tolerance
        ]

    def as_dict(self):
        return {
            "pass": self.passed,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "rows": [
                {
                    "in": _shown(row.inputs),
                    "expected": row.expected,
                    "obtained": row.obtained,
                    "deviation": row.deviation,
                }
                for row in self.rows
            ],
        }


def analyze_symmetry(table: TruthTable) -> SymmetryProfile:
    by_weight = {}
    for key, label in table.rows.items():
        by_weight.setdefault(hamming_weight(key), set()).add(label)
    if any(len(labels) > 1 for labels in by_weight.values()):
        return SymmetryProfile(is_symmetric=False)
    return SymmetryProfile(
        is_symmetric=True,
        weight_outputs=tuple(by_weight[w].pop() for w in range(table.input_count + 1)),
    )


def find_cycle(profile: SymmetryProfile, output_qubits: int) -> CyclePermutation:
    """Shortest cycle whose orbit, read from |0…0⟩, reproduces the weight-indexed outputs."""
    if not profile.is_symmetric:
        raise NotSymmetric("outputs depend on more than the input Hamming weight")
    outputs = profile.weight_outputs
    if outputs[0] != "0" * output_qubits:
        raise InitialStateMismatch(
            f"weight-0 output is {outputs[0]!r}, but U(0) = I keeps the state at {'0' * output_qubits!r}"
        )
    indices = [label_to_index(label) for label in outputs]
    for length in range(1, len(indices) + 1):
        orbit = indices[:length]
        if len(set(orbit)) != length:
            # every longer prefix repeats the same index too
            break
        if all(indices[s] == orbit[s % length] for s in range(len(indices))):
            return CyclePermutation(dim=2**output_qubits, orbit=tuple(orbit))
    raise NonEmbeddable(f"weight outputs {outputs} are not the orbit of a single cycle")


def synthesize(table: TruthTable) -> QhcGate:
    profile = analyze_symmetry(table)
    if not profile.is_symmetric:
        raise NotSymmetric("outputs depend on more than the input Hamming weight")
    cycle = find_cycle(profile, table.output_qubits)
    LOGGER.debug("table embeds in cycle %s of length %d", cycle.orbit, cycle.length)
    return QhcGate(
        cycle=cycle,
        spectrum=cycle_spectrum(cycle.orbit, cycle.dim),
        input_count=table.input_count,
    )


def verify(gate: QhcGate, table: TruthTable, tolerance: float) -> VerificationReport:
    """Apply ``U(weight(x))`` to |0…0⟩ for every row ``x`` and compare against the table."""
    unitaries = {}
    rows = []
    for key, expected in table.rows.items():
        weight = hamming_weight(key)
        if weight not in unitaries:
            unitaries[weight] = gate.unitary(weight)
        state = unitaries[weight].column(0)
        target = np.zeros(gate.cycle.dim, dtype=complex)
        target[label_to_index(expected)] = 1.0
        obtained = index_to_label(int(np.argmax(np.abs(state) ** 2)), table.output_qubits)
        rows.append(
            VerificationRow(
                inputs=key,
                expected=expected,
                obtained=obtained,
                deviation=float(np.max(np.abs(state - target))),
            )
        )
    report = VerificationReport(rows=tuple(rows), tolerance=tolerance)
    for row in report.failures:
        LOGGER.debug("row %s: expected %s, obtained %s", _shown(row.inputs), row.expected, row.obtained)
    return report


def qubit_count(table: TruthTable) -> int:
    """``ceil(log2 O)`` for ``O`` distinct output labels."""
    return (len(table.distinct_outputs()) - 1).bit_length()
