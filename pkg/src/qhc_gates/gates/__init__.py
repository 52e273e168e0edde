# -*- coding: utf-8 -*-
"""Reference half-adder and full-adder gates."""

from .forms import (
    FullAdderCoefficients,
    GateLabel,
    HalfAdderCoefficients,
    appendix_H,
    appendix_R,
    closed_form,
    cross_validate,
    full_adder_closed_form,
    full_adder_coefficients,
    half_adder_closed_form,
    half_adder_coefficients,
)

__all__ = [
    "FullAdderCoefficients",
    "GateLabel",
    "HalfAdderCoefficients",
    "appendix_H",
    "appendix_R",
    "closed_form",
    "cross_validate",
    "full_adder_closed_form",
    "full_adder_coefficients",
    "half_adder_closed_form",
    "half_adder_coefficients",
]
