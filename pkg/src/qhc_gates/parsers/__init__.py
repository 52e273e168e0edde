# -*- coding: utf-8 -*-
"""Truth-table and matrix documents.

Truth tables are JSON objects ``{"inputs": k, "output_qubits": N, "rows": [{"in": ..., "out": ...}, ...]}``.
Matrices are emitted as JSON ``{"dim": d, "entries": [[{"re": x, "im": y}, ...], ...]}`` (row-major)
or as CSV with one row per line and ``a+bi`` cells.
"""
import json
import logging
import math

from qhc_gates.exceptions import ParseError, ValidationError
from qhc_gates.linalg import ComplexMatrix
from qhc_gates.synthesis import MAX_OUTPUT_QUBITS, TruthTable, missing_input_diagnostics
from qhc_gates.utils import is_bit_string

LOGGER = logging.getLogger(__name__)

MATRIX_FORMATS = ("json", "csv")


def _raise(error_class, message, diagnostics=()):
    error = error_class(message, diagnostics)
    LOGGER.debug("rejecting document: %s", error)
    raise error


def _positive_int(document, key, diagnostics):
    value = document.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        diagnostics.append(f"field '{key}' must be a positive integer, got {value!r}")
        return None
    return value


def parse_truth_table(text) -> TruthTable:
    """Parse and validate a truth-table document.

    Malformed documents raise ``ParseError``; well-formed documents with missing,
    duplicate or mis-sized rows raise ``ValidationError``. Both list every
    offending row; absent rows of tables with many inputs are counted instead.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        _raise(ParseError, f"not a JSON document: {exc.msg} (line {exc.lineno}, column {exc.colno})")
    if not isinstance(document, dict):
        _raise(ParseError, "a truth-table document must be a JSON object")

    diagnostics = [f"missing field '{key}'" for key in ("inputs", "output_qubits", "rows") if key not in document]
    if diagnostics:
        _raise(ParseError, "malformed truth-table document", diagnostics)
    inputs = _positive_int(document, "inputs", diagnostics)
    output_qubits = _positive_int(document, "output_qubits", diagnostics)
    rows = document["rows"]
    if not isinstance(rows, list):
        diagnostics.append("field 'rows' must be a list")
        rows = []

    entries = []
    for number, row in enumerate(rows, start=1):
        if not isinstance(row, dict) or "in" not in row or "out" not in row:
            diagnostics.append(f"row {number}: expected an object with 'in' and 'out'")
            continue
        bad = [key for key in ("in", "out") if not is_bit_string(row[key])]
        if bad:
            diagnostics.extend(
                f"row {number}: '{key}' value {row[key]!r} contains a non-bit character" for key in bad
            )
            continue
        entries.append((number, row["in"], row["out"]))
    if diagnostics:
        _raise(ParseError, "malformed truth-table document", diagnostics)

    if output_qubits > MAX_OUTPUT_QUBITS:
        diagnostics.append(f"field 'output_qubits' is {output_qubits}, at most {MAX_OUTPUT_QUBITS} is supported")
    table_rows = {}
    for number, bits_in, bits_out in entries:
        if len(bits_in) != inputs:
            diagnostics.append(f"row {number}: input '{bits_in}' has {len(bits_in)} bits, expected {inputs}")
            continue
        if len(bits_out) != output_qubits:
            diagnostics.append(
                f"row {number}: output '{bits_out}' has {len(bits_out)} bits, expected {output_qubits}"
            )
        key = tuple(int(c) for c in bits_in)
        if key in table_rows:
            diagnostics.append(f"row {number}: duplicate input '{bits_in}'")
            continue
        table_rows[key] = bits_out
    diagnostics.extend(missing_input_diagnostics(table_rows, inputs))
    if diagnostics:
        _raise(ValidationError, "invalid truth table", diagnostics)

    return TruthTable(input_count=inputs, output_qubits=output_qubits, rows=table_rows)


def emit_truth_table(table: TruthTable) -> str:
    """Canonical document for ``table``, one row per line, rows ordered by input."""
    rows = [
        json.dumps({"in": "".join(map(str, key)), "out": label}) for key, label in sorted(table.rows.items())
    ]
    return (
        "{\n"
        f'  "inputs": {table.input_count},\n'
        f'  "output_qubits": {table.output_qubits},\n'
        '  "rows": [\n    ' + ",\n    ".join(rows) + "\n  ]\n"
        "}\n"
    )


def _format_real(value):
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _format_cell(value):
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{_format_real(value.real)}{sign}{_format_real(abs(value.imag))}i"


def emit_matrix(matrix: ComplexMatrix, format="json") -> str:  # pylint: disable=redefined-builtin
    if format == "json":
        entries = [
            [{"re": float(value.real), "im": float(value.imag)} for value in row] for row in matrix.entries
        ]
        return json.dumps({"dim": matrix.dim, "entries": entries})
    if format == "csv":
        return "".join(",".join(_format_cell(value) for value in row) + "\n" for row in matrix.entries)
    raise ValueError(f"unknown matrix format {format!r}, expected one of {MATRIX_FORMATS}")


def parse_matrix(text) -> ComplexMatrix:
    """Inverse of ``emit_matrix(..., "json")``; entries are reproduced bit-exactly."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        _raise(ParseError, f"not a JSON document: {exc.msg} (line {exc.lineno}, column {exc.colno})")
    try:
        dim = document["dim"]
        rows = [[complex(cell["re"], cell["im"]) for cell in row] for row in document["entries"]]
    except (KeyError, TypeError) as exc:
        _raise(ParseError, f"malformed matrix document: {exc!r}")
    if len(rows) != dim or any(len(row) != dim for row in rows):
        _raise(ParseError, f"matrix entries do not form a {dim}x{dim} array")
    return ComplexMatrix(rows)
