"""Command line interface for the qhc-gates package.

Results are written to standard output as JSON, diagnostics to standard error.
Exit codes: 0 on success, 1 when verification fails, 2 on input errors.
"""
import json
import logging
import pathlib
import sys

import click

from qhc_gates.data import builtin_table, builtin_table_names
from qhc_gates.exceptions import QhcError
from qhc_gates.gates import GateLabel
from qhc_gates.parsers import MATRIX_FORMATS, emit_matrix, parse_truth_table
from qhc_gates.reports import resource_report
from qhc_gates.simulation import evaluate_continuous
from qhc_gates.synthesis import synthesize
from qhc_gates.workflows import QhcSynthesisWorkflow

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

GATE_NAMES = [label.value for label in GateLabel]


def _configure_logging(verbose):
    logger = logging.getLogger("qhc_gates")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO if verbose else logging.WARNING)


def _fail(message, status=EXIT_INPUT_ERROR):
    click.echo(f"Error: {message}", err=True)
    sys.exit(status)


def _echo_json(data):
    click.echo(json.dumps(data, indent=2))


def _load_table(path):
    try:
        return parse_truth_table(pathlib.Path(path).read_text(encoding="utf-8"))
    except QhcError as exception:
        _fail(f"{path}: {exception}")


def _matrix_payload(matrix, fmt):
    text = emit_matrix(matrix, fmt)
    return json.loads(text) if fmt == "json" else text


def _parse_inputs(ctx, param, value):  # pylint: disable=unused-argument
    try:
        return [float(item) for item in value.split(",")]
    except ValueError as exception:
        raise click.BadParameter(f"expected comma-separated reals, got {value!r}") from exception


def _protocol_option(func):
    return click.option(
        "--protocol",
        type=click.Choice(list(QhcSynthesisWorkflow.get_available_protocols())),
        default=None,
        help="Protocol selecting tolerances and grid sizes (default: balanced).",
    )(func)


def _exit_for(result):
    if result.is_finished_ok:
        return EXIT_SUCCESS
    if result.exit_code.status >= 400:
        return EXIT_VERIFICATION_FAILED
    return EXIT_INPUT_ERROR


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Report workflow progress on standard error.")
def cli(verbose):
    _configure_logging(verbose)


@cli.command(help="Synthesize the QHC gate of a truth table and verify it.")
@click.option("--table", "table_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--emit-h", "emit_h", type=click.Path(dir_okay=False, writable=True), help="Write the generator H here.")
@click.option("--emit-u", "emit_u", type=float, help="Include the unitary U(SUM) in the output.")
@click.option("--emit", "fmt", type=click.Choice(MATRIX_FORMATS), default="json", show_default=True)
@click.option("--tolerance", type=float, help="Verification tolerance (default 1e-9).")
@_protocol_option
def synth(table_path, emit_h, emit_u, fmt, tolerance, protocol):
    table = _load_table(table_path)
    overrides = {} if tolerance is None else {"tolerance": tolerance}
    try:
        result = QhcSynthesisWorkflow.get_builder_from_protocol(table, protocol=protocol, overrides=overrides).run()
    except QhcError as exception:
        _fail(f"{table_path}: {exception}")
    if result.gate is None:
        _fail(f"{table_path}: {result.exit_code.message}")

    data = result.as_dict()
    try:
        if emit_h:
            pathlib.Path(emit_h).write_text(emit_matrix(result.gate.generator(), fmt), encoding="utf-8")
            data["generator_file"] = emit_h
        if emit_u is not None:
            data["unitary"] = {"sum": emit_u, "matrix": _matrix_payload(result.gate.unitary(emit_u), fmt)}
    except (QhcError, OSError) as exception:
        _fail(str(exception))
    _echo_json(data)
    sys.exit(_exit_for(result))


@cli.command(help="Evaluate a gate on (possibly real-valued) inputs, starting from |0…0⟩.")
@click.option("--gate", "gate_name", required=True, help=f"One of {GATE_NAMES} or a truth-table file.")
@click.option("--inputs", required=True, callback=_parse_inputs, help="Comma-separated inputs, e.g. 1,0,0.5")
@click.option("--tolerance", type=float, help="Basis-state detection threshold on probability (default 1e-6).")
@_protocol_option
def simulate(gate_name, inputs, tolerance, protocol):
    table = builtin_table(gate_name) if gate_name in builtin_table_names() else None
    if table is None:
        if not pathlib.Path(gate_name).is_file():
            _fail(f"`{gate_name}` is neither a built-in gate {GATE_NAMES} nor a truth-table file")
        table = _load_table(gate_name)
    settings = QhcSynthesisWorkflow.get_protocol_inputs(protocol)
    tolerance = settings["decode_tolerance"] if tolerance is None else tolerance
    try:
        gate = synthesize(table)
        outcome = evaluate_continuous(gate, inputs, tolerance)
    except QhcError as exception:
        _fail(str(exception))
    _echo_json({"gate": gate_name, "inputs": inputs, "sum": sum(inputs), "outcome": outcome.as_dict()})


@cli.command(help="Verify a built-in gate against its truth table and its closed form.")
@click.option("--gate", "gate_name", required=True, type=click.Choice(GATE_NAMES))
@click.option("--table", "table_path", type=click.Path(exists=True, dir_okay=False),
              help="Verify against this table instead of the gate's own.")
@click.option("--grid", type=click.IntRange(min=2), help="Grid points for the closed-form check (default 101).")
@click.option("--tolerance", type=float, help="Tolerance for every check (default 1e-9).")
@_protocol_option
def verify(gate_name, table_path, grid, tolerance, protocol):
    label = GateLabel(gate_name)
    table = builtin_table(gate_name) if table_path is None else _load_table(table_path)
    if table.input_count != label.input_count or table.output_qubits != 2:
        _fail(f"{table_path}: a {gate_name} table has {label.input_count} inputs and 2 output qubits")
    overrides = {"cross_validation": {}}
    if tolerance is not None:
        overrides["tolerance"] = tolerance
        overrides["cross_validation"]["tolerance"] = tolerance
    if grid is not None:
        overrides["cross_validation"]["grid_points"] = grid
    result = QhcSynthesisWorkflow.get_builder_from_protocol(
        table, label=label, protocol=protocol, overrides=overrides
    ).run()
    _echo_json(result.as_dict())
    for row in result.verification.failures if result.verification else []:
        click.echo(
            f"row {''.join(map(str, row.inputs))}: expected |{row.expected}⟩, obtained |{row.obtained}⟩",
            err=True,
        )
    sys.exit(_exit_for(result))


@cli.command(help="Compare the qubit and gate resources of a truth table against reversible baselines.")
@click.option("--table", "table_path", required=True, type=click.Path(exists=True, dir_okay=False))
def report(table_path):
    table = _load_table(table_path)
    _echo_json([entry.as_dict() for entry in resource_report(table)])


@cli.command(help="List the available protocols.")
def protocols():
    _echo_json(
        {
            "default": QhcSynthesisWorkflow.get_default_protocol(),
            "protocols": QhcSynthesisWorkflow.get_available_protocols(),
        }
    )


if __name__ == "__main__":
    cli()
