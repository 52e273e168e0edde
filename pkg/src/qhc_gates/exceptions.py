# -*- coding: utf-8 -*-
"""Exceptions raised by the qhc-gates package."""


class QhcError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(QhcError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class InvalidOrbit(QhcError, ValueError):
    """A cycle orbit has duplicate or out-of-range basis indices."""


class InvalidParameter(QhcError, ValueError):
    """A gate parameter is not a finite real number."""


class NonUnitaryError(QhcError, ValueError):
    """A matrix expected to be unitary exceeds the unitarity tolerance."""


class NotSymmetric(QhcError):
    """The truth table output depends on more than the input Hamming weight."""


class InitialStateMismatch(QhcError):
    """The weight-zero output is not the all-zeros basis state."""


class NonEmbeddable(QhcError):
    """No single cycle permutation reproduces the weight-indexed outputs."""


class _DiagnosticError(QhcError):
    """Error carrying row-level diagnostics."""

    def __init__(self, message, diagnostics=None):
        self.diagnostics = list(diagnostics or [])
        if self.diagnostics:
            message = message + "\n" + "\n".join(f"  - {d}" for d in self.diagnostics)
        super().__init__(message)


class ParseError(_DiagnosticError):
    """A truth-table or matrix document is malformed."""


class ValidationError(_DiagnosticError):
    """A well-formed truth table violates the table invariants."""
