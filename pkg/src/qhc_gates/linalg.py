# -*- coding: utf-8 -*-
"""Dense complex linear algebra for small Hilbert spaces.

Matrices are immutable: every operation returns a fresh :class:`ComplexMatrix`.
Permutation cycles are diagonalized analytically with discrete-Fourier
eigenvectors, so no general eigensolver is involved anywhere.
"""
from dataclasses import dataclass
import math
from typing import Sequence, Tuple

import numpy as np

from qhc_gates.exceptions import DimensionError, InvalidOrbit, InvalidParameter
from qhc_gates.utils import check_finite

MAX_DIM = 64

#: Tolerance for exact algebraic identities (unitarity, hermiticity, orthonormality).
ALGEBRAIC_TOLERANCE = 1e-12
#: Tolerance for comparisons across different evaluation paths.
CROSS_FORM_TOLERANCE = 1e-9


def _frozen(array):
    array.setflags(write=False)
    return array


class ComplexMatrix:
    """Square matrix of finite complex entries, read-only after construction."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        if isinstance(entries, ComplexMatrix):
            entries = entries.entries
        array = np.array(entries, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
            raise DimensionError(f"a ComplexMatrix must be square with dim >= 1, got shape {array.shape}")
        if array.shape[0] > MAX_DIM:
            raise DimensionError(f"dimension {array.shape[0]} exceeds the supported maximum of {MAX_DIM}")
        if not np.all(np.isfinite(array)):
            raise InvalidParameter("matrix entries must be finite")
        self._entries = _frozen(array)

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim, dtype=complex))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def column(self, index) -> np.ndarray:
        return self._entries[:, index].copy()

    def max_abs_diff(self, other) -> float:
        if self.dim != other.dim:
            raise DimensionError(f"cannot compare dimensions {self.dim} and {other.dim}")
        return float(np.max(np.abs(self._entries - other.entries)))

    def __matmul__(self, other):
        return matmul(self, other)

    def __getitem__(self, key):
        return self._entries[key]

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other.entries)

    __hash__ = None

    def __repr__(self):
        return f"ComplexMatrix(dim={self.dim})"


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenangles and orthonormal eigenvectors of a unitary ``Σ_j e^{iφ_j} v_j v_j†``.

    ``eigenvectors`` holds one eigenvector per column, in the order of ``eigenangles``.
    """

    dim: int
    eigenangles: np.ndarray
    eigenvectors: np.ndarray
    fixed_subspace_indices: Tuple[int, ...]
    orbit: Tuple[int, ...] = ()

    def __post_init__(self):
        _frozen(self.eigenangles)
        _frozen(self.eigenvectors)

    def reconstruct(self) -> ComplexMatrix:
        return exp_from_spectrum(self, 1.0)

    def generator(self) -> ComplexMatrix:
        """Hermitian ``H = Σ_j (-φ_j) v_j v_j†``, so that ``exp(-isH)`` is the family ``U(s)``."""
        vectors = self.eigenvectors
        return ComplexMatrix((vectors * -self.eigenangles) @ vectors.conj().T)

    def orthonormality_defect(self) -> float:
        gram = self.eigenvectors.conj().T @ self.eigenvectors
        return float(np.max(np.abs(gram - np.eye(self.dim))))


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.dim != b.dim:
        raise DimensionError(f"cannot multiply matrices of dimension {a.dim} and {b.dim}")
    return ComplexMatrix(a.entries @ b.entries)


def adjoint(a: ComplexMatrix) -> ComplexMatrix:
    return ComplexMatrix(a.entries.conj().T)


def unitarity_defect(a: ComplexMatrix) -> float:
    """Max-abs-entry norm of ``a†a - I``; zero iff ``a`` is unitary."""
    gram = a.entries.conj().T @ a.entries
    return float(np.max(np.abs(gram - np.eye(a.dim))))


def hermiticity_defect(a: ComplexMatrix) -> float:
    """Max-abs-entry norm of ``a - a†``."""
    return float(np.max(np.abs(a.entries - a.entries.conj().T)))


def principal_angle(j, length) -> float:
    """Angle of ``exp(2πij/length)`` on the principal branch (-π, π]."""
    j %= length
    if 2 * j > length:
        j -= length
    return 2 * math.pi * j / length


def permutation_matrix(orbit: Sequence[int], dim: int) -> ComplexMatrix:
    """Matrix sending ``e_{orbit[m]}`` to ``e_{orbit[m+1 mod L]}`` and fixing every other basis vector."""
    orbit = _validate_orbit(orbit, dim)
    array = np.eye(dim, dtype=complex)
    length = len(orbit)
    if length > 1:
        for m, index in enumerate(orbit):
            array[:, index] = 0
            array[orbit[(m + 1) % length], index] = 1
    return ComplexMatrix(array)


def _validate_orbit(orbit, dim):
    if not 1 <= dim <= MAX_DIM:
        raise DimensionError(f"dimension must lie in [1, {MAX_DIM}], got {dim}")
    orbit = tuple(int(i) for i in orbit)
    if not orbit:
        raise InvalidOrbit("an orbit needs at least one basis index")
    if len(set(orbit)) != len(orbit):
        raise InvalidOrbit(f"orbit {orbit} has duplicate indices")
    out_of_range = [i for i in orbit if not 0 <= i < dim]
    if out_of_range:
        raise InvalidOrbit(f"orbit indices {out_of_range} are out of range for dimension {dim}")
    return orbit


def cycle_spectrum(orbit: Sequence[int], dim: int) -> SpectralDecomposition:
    """Exact spectral decomposition of the permutation cycling ``orbit``.

    On the orbit the eigenvalues are the L-th roots of unity with principal
    eigenangles ``φ_j``; the eigenvector for ``φ_j`` has component
    ``exp(-2πi·j·m/L)/√L`` on ``orbit[m]``. Basis indices off the orbit are
    fixed points with eigenangle 0. A 1-cycle is the identity.
    """
    orbit = _validate_orbit(orbit, dim)
    length = len(orbit)

    angles = []
    columns = []
    if length > 1:
        m = np.arange(length)
        for j in range(length):
            vector = np.zeros(dim, dtype=complex)
            # reduce j*m mod L to keep the phase argument small
            vector[list(orbit)] = np.exp(-2j * np.pi * ((j * m) % length) / length) / math.sqrt(length)
            angles.append(principal_angle(j, length))
            columns.append(vector)
        fixed = tuple(i for i in range(dim) if i not in orbit)
    else:
        fixed = tuple(range(dim))
    for index in fixed:
        vector = np.zeros(dim, dtype=complex)
        vector[index] = 1.0
        angles.append(0.0)
        columns.append(vector)

    return SpectralDecomposition(
        dim=dim,
        eigenangles=np.array(angles, dtype=float),
        eigenvectors=np.column_stack(columns),
        fixed_subspace_indices=fixed,
        orbit=orbit,
    )


def exp_from_spectrum(spec: SpectralDecomposition, s: float) -> ComplexMatrix:
    """``U(s) = Σ_j e^{i·s·φ_j} v_j v_j†``, i.e. ``exp(-isH)`` for the spectrum's generator."""
    check_finite(s=s)
    vectors = spec.eigenvectors
    phases = np.exp(1j * float(s) * spec.eigenangles)
    return ComplexMatrix((vectors * phases) @ vectors.conj().T)
