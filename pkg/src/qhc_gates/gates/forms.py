# -*- coding: utf-8 -*-
"""Closed-form half-adder and full-adder unitaries and the explicit 4-cycle construction."""
from dataclasses import dataclass
import enum
import math

import numpy as np

from qhc_gates.exceptions import InvalidParameter
from qhc_gates.linalg import ComplexMatrix, cycle_spectrum, exp_from_spectrum, permutation_matrix
from qhc_gates.utils import check_finite


class GateLabel(enum.Enum):
    HalfAdder = "half-adder"
    FullAdder = "full-adder"

    @property
    def orbit(self):
        """Cycle of basis indices the gate rotates |00⟩ through."""
        return _ORBITS[self]

    @property
    def cycle_length(self):
        return len(_ORBITS[self])

    @property
    def input_count(self):
        return 2 if self is GateLabel.HalfAdder else 3


_ORBITS = {
    GateLabel.HalfAdder: (0, 1, 3),
    GateLabel.FullAdder: (0, 1, 2, 3),
}


@dataclass(frozen=True)
class HalfAdderCoefficients:
    A: float
    B: float
    F: float


@dataclass(frozen=True)
class FullAdderCoefficients:
    l: complex  # noqa: E741
    m: float
    n: float
    p: float
    q: float


def half_adder_coefficients(s) -> HalfAdderCoefficients:
    """Coefficients of the half-adder unitary at input sum ``s = α + β``."""
    check_finite(s=s)
    theta = 2 * math.pi * s / 3
    return HalfAdderCoefficients(
        A=(2 * math.cos(theta) + 1) / 3,
        B=(1 - math.cos(theta)) / 3,
        F=math.sin(theta) / math.sqrt(3),
    )


def full_adder_coefficients(s) -> FullAdderCoefficients:
    """Coefficients of the full-adder unitary at input sum ``s = α + γ + β``.

    ``l`` and ``p + iq`` coincide; both are kept because the matrix uses each.
    """
    check_finite(s=s)
    return FullAdderCoefficients(
        l=complex(np.exp(1j * math.pi * s)),
        m=math.cos(math.pi * s / 2),
        n=math.sin(math.pi * s / 2),
        p=math.cos(math.pi * s),
        q=math.sin(math.pi * s),
    )


def half_adder_closed_form(alpha, beta) -> ComplexMatrix:
    check_finite(alpha=alpha, beta=beta)
    c = half_adder_coefficients(alpha + beta)
    a, plus, minus = c.A, c.B + c.F, c.B - c.F
    return ComplexMatrix(
        [
            [a, minus, 0, plus],
            [plus, a, 0, minus],
            [0, 0, 1, 0],
            [minus, plus, 0, a],
        ]
    )


def full_adder_closed_form(alpha, gamma, beta) -> ComplexMatrix:
    check_finite(alpha=alpha, gamma=gamma, beta=beta)
    c = full_adder_coefficients(alpha + gamma + beta)
    diag = c.l + 2 * c.m + 1
    half = c.l - 2 * c.m + 1
    up = 2 * c.n - c.p - 1j * c.q + 1
    down = -2 * c.n - c.p - 1j * c.q + 1
    return ComplexMatrix(
        np.array(
            [
                [diag, down, half, up],
                [up, diag, down, half],
                [half, up, diag, down],
                [down, half, up, diag],
            ],
            dtype=complex,
        )
        / 4
    )


def closed_form(kind: GateLabel, params) -> ComplexMatrix:
    """Dispatch to the closed form of ``kind`` with one parameter per gate input."""
    params = tuple(params)
    if len(params) != kind.input_count:
        raise InvalidParameter(f"{kind.value} takes {kind.input_count} parameters, got {len(params)}")
    if kind is GateLabel.HalfAdder:
        return half_adder_closed_form(*params)
    return full_adder_closed_form(*params)


def appendix_R() -> ComplexMatrix:  # pylint: disable=invalid-name
    """The 4-cycle |00⟩→|01⟩→|10⟩→|11⟩→|00⟩ as an exact 0/1 matrix."""
    return permutation_matrix((0, 1, 2, 3), 4)


def appendix_H() -> ComplexMatrix:  # pylint: disable=invalid-name
    """``H = i log R`` on the principal branch; Hermitian, with ``exp(-iH) = R``."""
    return cycle_spectrum((0, 1, 2, 3), 4).generator()


def cross_validate(kind: GateLabel, grid_points: int) -> float:
    """Largest entrywise gap between the closed form and the spectral ``U(s)`` on ``s ∈ [0, L]``."""
    if grid_points < 2:
        raise InvalidParameter(f"grid_points must be at least 2, got {grid_points}")
    spectrum = cycle_spectrum(kind.orbit, 4)
    worst = 0.0
    for s in np.linspace(0.0, kind.cycle_length, grid_points):
        params = (float(s),) + (0.0,) * (kind.input_count - 1)
        worst = max(worst, closed_form(kind, params).max_abs_diff(exp_from_spectrum(spectrum, s)))
    return worst
