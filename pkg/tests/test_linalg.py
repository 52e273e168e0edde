import math

from hypothesis import given, settings
import hypothesis.strategies as st
import numpy as np
import pytest
from scipy.linalg import expm

from qhc_gates.exceptions import DimensionError, InvalidOrbit, InvalidParameter
from qhc_gates.gates import appendix_R
from qhc_gates.linalg import (
    ComplexMatrix,
    adjoint,
    cycle_spectrum,
    exp_from_spectrum,
    hermiticity_defect,
    matmul,
    permutation_matrix,
    principal_angle,
    unitarity_defect,
)

I4 = ComplexMatrix.identity(4)
ORBITS = [((0, 1, 2, 3), 4), ((0, 1, 3), 4), ((0,), 4), ((2, 0), 4), ((0, 5, 3, 7, 1), 8), ((1,), 2)]


def test_matmul_identity():
    assert matmul(I4, I4) == I4


def test_matmul_fourth_power_of_cycle_is_identity():
    r = appendix_R()
    assert r @ r @ r @ r == I4


def test_matmul_two_shifts_send_e0_to_e2():
    r = appendix_R()
    np.testing.assert_array_equal((r @ r).column(0), np.eye(4)[2])


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionError):
        matmul(I4, ComplexMatrix.identity(2))


def test_matrix_rejects_non_square_and_non_finite():
    with pytest.raises(DimensionError):
        ComplexMatrix(np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        ComplexMatrix.identity(65)
    with pytest.raises(InvalidParameter):
        ComplexMatrix([[1, np.nan], [0, 1]])


def test_matrix_is_read_only():
    m = ComplexMatrix.identity(2)
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5
    source = np.eye(2)
    copy = ComplexMatrix(source)
    source[0, 0] = 7
    assert copy[0, 0] == 1


def test_adjoint():
    assert adjoint(I4) == I4
    r = appendix_R()
    assert (adjoint(r) @ r).max_abs_diff(I4) <= 1e-15
    d = ComplexMatrix(np.diag([1j, -1j, 1, 1]))
    assert adjoint(d) == ComplexMatrix(np.diag([-1j, 1j, 1, 1]))


def test_adjoint_is_an_involution(rng):
    a = ComplexMatrix(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    assert adjoint(adjoint(a)) == a


def test_unitarity_defect():
    assert unitarity_defect(I4) == 0
    # a†a - I = [[1, 2], [2, 1]]
    assert unitarity_defect(ComplexMatrix(np.ones((2, 2)))) == 2.0


def test_principal_angle_branch():
    assert principal_angle(2, 4) == math.pi
    assert principal_angle(3, 4) == -math.pi / 2
    assert principal_angle(1, 3) == pytest.approx(2 * math.pi / 3)
    assert principal_angle(2, 3) == pytest.approx(-2 * math.pi / 3)


def test_cycle_spectrum_four_cycle():
    spectrum = cycle_spectrum((0, 1, 2, 3), 4)
    assert sorted(spectrum.eigenangles) == pytest.approx(sorted([0, math.pi / 2, math.pi, -math.pi / 2]))
    assert spectrum.fixed_subspace_indices == ()
    assert np.allclose(np.abs(spectrum.eigenvectors), 0.5)


def test_cycle_spectrum_one_cycle_is_identity():
    spectrum = cycle_spectrum((0,), 4)
    assert np.all(spectrum.eigenangles == 0)
    assert spectrum.reconstruct().max_abs_diff(I4) <= 1e-12


def test_cycle_spectrum_three_cycle():
    spectrum = cycle_spectrum((0, 1, 3), 4)
    assert spectrum.fixed_subspace_indices == (2,)
    assert sorted(spectrum.eigenangles[:3]) == pytest.approx([-2 * math.pi / 3, 0, 2 * math.pi / 3])
    assert spectrum.eigenangles[3] == 0
    three_cycle = ComplexMatrix(
        [
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
        ]
    )
    assert spectrum.reconstruct().max_abs_diff(three_cycle) <= 1e-12
    assert permutation_matrix((0, 1, 3), 4) == three_cycle


@pytest.mark.parametrize("orbit", [(0, 0, 1), (0, 4), (-1, 2), ()])
def test_cycle_spectrum_invalid_orbit(orbit):
    with pytest.raises(InvalidOrbit):
        cycle_spectrum(orbit, 4)


@pytest.mark.parametrize("orbit, dim", ORBITS)
def test_cycle_spectrum_is_orthonormal_and_reconstructs(orbit, dim):
    spectrum = cycle_spectrum(orbit, dim)
    assert spectrum.eigenvectors.shape == (dim, dim)
    assert spectrum.orthonormality_defect() <= 1e-12
    assert spectrum.reconstruct().max_abs_diff(permutation_matrix(orbit, dim)) <= 1e-12
    assert np.all(spectrum.eigenangles > -math.pi)
    assert np.all(spectrum.eigenangles <= math.pi)


def test_exp_from_spectrum_examples():
    spectrum = cycle_spectrum((0, 1, 2, 3), 4)
    assert exp_from_spectrum(spectrum, 0).max_abs_diff(I4) <= 1e-12
    assert exp_from_spectrum(spectrum, 1).max_abs_diff(appendix_R()) <= 1e-12
    assert np.max(np.abs(exp_from_spectrum(spectrum, 2).column(0) - np.eye(4)[2])) <= 1e-12


@pytest.mark.parametrize("s", [math.nan, math.inf, -math.inf])
def test_exp_from_spectrum_rejects_non_finite(s):
    with pytest.raises(InvalidParameter):
        exp_from_spectrum(cycle_spectrum((0, 1), 2), s)


@pytest.mark.parametrize("orbit, dim", ORBITS)
def test_one_parameter_group_law(orbit, dim, rng):
    spectrum = cycle_spectrum(orbit, dim)
    for s1, s2 in rng.uniform(-4, 4, size=(50, 2)):
        product = exp_from_spectrum(spectrum, s1) @ exp_from_spectrum(spectrum, s2)
        assert product.max_abs_diff(exp_from_spectrum(spectrum, s1 + s2)) <= 1e-10


@pytest.mark.parametrize("orbit, dim", ORBITS)
def test_integer_parameters_are_matrix_powers(orbit, dim):
    spectrum = cycle_spectrum(orbit, dim)
    one = exp_from_spectrum(spectrum, 1).entries
    for k in range(9):
        expected = ComplexMatrix(np.linalg.matrix_power(one, k))
        assert exp_from_spectrum(spectrum, k).max_abs_diff(expected) <= 1e-10


@pytest.mark.parametrize("orbit, dim", ORBITS)
def test_family_is_unitary(orbit, dim, rng):
    spectrum = cycle_spectrum(orbit, dim)
    for s in rng.uniform(-10, 10, size=100):
        assert unitarity_defect(exp_from_spectrum(spectrum, s)) <= 1e-12


def test_four_cycle_fourth_power():
    spectrum = cycle_spectrum((0, 1, 2, 3), 4)
    assert exp_from_spectrum(spectrum, 4).max_abs_diff(I4) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(s=st.floats(min_value=-6, max_value=6, allow_nan=False), orbit=st.sampled_from([(0, 1, 2, 3), (0, 1, 3), (0, 2)]))
def test_spectral_exponential_matches_expm_of_generator(s, orbit):
    spectrum = cycle_spectrum(orbit, 4)
    h = spectrum.generator()
    assert hermiticity_defect(h) <= 1e-12
    expected = ComplexMatrix(expm(-1j * s * h.entries))
    assert exp_from_spectrum(spectrum, s).max_abs_diff(expected) <= 1e-10
