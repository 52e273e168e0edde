import math

from hypothesis import given, settings
import hypothesis.strategies as st
import numpy as np
import pytest

from qhc_gates.data import builtin_table
from qhc_gates.exceptions import DimensionError, InvalidParameter, NonUnitaryError
from qhc_gates.gates import appendix_R, full_adder_closed_form, half_adder_closed_form
from qhc_gates.linalg import ComplexMatrix
from qhc_gates.simulation import (
    OutcomeKind,
    StateVector,
    apply,
    decode,
    evaluate_continuous,
    initial_state,
)
from qhc_gates.synthesis import synthesize
from qhc_gates.utils import bit_tuples


@pytest.mark.parametrize("qubits, dim", [(1, 2), (2, 4), (3, 8)])
def test_initial_state(qubits, dim):
    psi = initial_state(qubits)
    assert psi.dim == dim
    np.testing.assert_array_equal(psi.amplitudes, np.eye(dim)[0])


def test_initial_state_needs_a_qubit():
    with pytest.raises(DimensionError):
        initial_state(0)


def test_state_vector_must_be_normalized():
    with pytest.raises(InvalidParameter):
        StateVector([1, 1, 0, 0])
    StateVector(np.array([1, 1, 0, 0]) / math.sqrt(2))


def test_apply_examples():
    e0 = initial_state(2)
    np.testing.assert_array_equal(apply(ComplexMatrix.identity(4), e0).amplitudes, np.eye(4)[0])
    out = apply(half_adder_closed_form(1, 1), e0)
    assert decode(out).label == "11"
    np.testing.assert_array_equal(apply(appendix_R(), StateVector(np.eye(4)[3])).amplitudes, np.eye(4)[0])


def test_apply_errors():
    with pytest.raises(DimensionError):
        apply(ComplexMatrix.identity(2), initial_state(2))
    with pytest.raises(NonUnitaryError):
        apply(ComplexMatrix(np.diag([1, 1, 1, 2])), initial_state(2))


def test_apply_preserves_norm(rng):
    for _ in range(100):
        alpha, gamma, beta = rng.uniform(-5, 5, size=3)
        u = full_adder_closed_form(alpha, gamma, beta) if rng.random() < 0.5 else half_adder_closed_form(alpha, beta)
        raw = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi = StateVector(raw / np.linalg.norm(raw))
        assert apply(u, psi).norm() == pytest.approx(1, abs=1e-10)


def test_decode_basis_state():
    outcome = decode(StateVector(np.eye(4)[1]))
    assert outcome.kind is OutcomeKind.Basis
    assert outcome.label == "01"


def test_decode_even_superposition():
    outcome = decode(StateVector(np.array([1, 1, 0, 0]) / math.sqrt(2)))
    assert outcome.kind is OutcomeKind.Superposed
    assert outcome.label is None
    assert outcome.probabilities == pytest.approx((0.5, 0.5, 0, 0))


def test_decode_full_adder_at_half_sum(full_adder_gate):
    expected = (4 + 2 * math.sqrt(2)) / 16
    for u in (full_adder_closed_form(0.5, 0, 0), full_adder_gate.unitary(0.5)):
        outcome = decode(apply(u, initial_state(2)))
        assert outcome.kind is OutcomeKind.Superposed
        assert outcome.probabilities[0] == pytest.approx(expected, abs=1e-12)
        assert sum(outcome.probabilities) == pytest.approx(1, abs=1e-10)


def test_evaluate_continuous_on_boolean_inputs(full_adder_gate, full_adder_table, half_adder_gate, half_adder_table):
    for gate, table in ((full_adder_gate, full_adder_table), (half_adder_gate, half_adder_table)):
        for inputs in bit_tuples(table.input_count):
            outcome = evaluate_continuous(gate, inputs)
            assert outcome.kind is OutcomeKind.Basis
            assert outcome.label == table.output(inputs)
            assert max(outcome.probabilities) >= 1 - 1e-9


def test_evaluate_continuous_examples(full_adder_gate, half_adder_gate):
    assert evaluate_continuous(full_adder_gate, (1, 0, 1)).label == "10"
    assert evaluate_continuous(full_adder_gate, (0, 0, 0)).label == "00"
    assert evaluate_continuous(half_adder_gate, (0.5, 0.5)) == evaluate_continuous(half_adder_gate, (1, 0))


def test_evaluate_continuous_errors(full_adder_gate):
    with pytest.raises(InvalidParameter):
        evaluate_continuous(full_adder_gate, (1, math.nan, 0))
    with pytest.raises(InvalidParameter):
        evaluate_continuous(full_adder_gate, (1, 0))


@settings(max_examples=20, deadline=None)
@given(
    inputs=st.lists(st.floats(min_value=-3, max_value=3, allow_nan=False), min_size=3, max_size=3),
    shift=st.floats(min_value=-1, max_value=1, allow_nan=False),
)
def test_evaluate_continuous_depends_only_on_the_sum(inputs, shift):
    gate = synthesize(builtin_table("full-adder"))
    moved = [inputs[0] + shift, inputs[1] - shift, inputs[2]]
    a = evaluate_continuous(gate, inputs)
    b = evaluate_continuous(gate, moved)
    assert a.probabilities == pytest.approx(b.probabilities, abs=1e-12)
    assert sum(a.probabilities) == pytest.approx(1, abs=1e-10)


def test_closed_forms_reproduce_the_truth_tables(half_adder_table, full_adder_table, main_text_full_adder_table):
    for inputs in bit_tuples(2):
        outcome = decode(apply(half_adder_closed_form(*inputs), initial_state(2)), 1e-9)
        assert outcome.label == half_adder_table.output(inputs)
    for inputs in bit_tuples(3):
        outcome = decode(apply(full_adder_closed_form(*inputs), initial_state(2)), 1e-9)
        assert outcome.label == full_adder_table.output(inputs)
        if inputs == (1, 1, 0):
            assert outcome.label != main_text_full_adder_table.output(inputs)
        else:
            assert outcome.label == main_text_full_adder_table.output(inputs)
