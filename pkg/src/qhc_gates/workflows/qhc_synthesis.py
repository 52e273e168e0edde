# -*- coding: utf-8 -*-
"""QhcSynthesisWorkflow: synthesize a gate, check it against a truth table and its closed form."""
from dataclasses import dataclass
import logging
from typing import Optional

from aiida.common import AttributeDict
from aiida.engine import ExitCode
from aiida.engine.processes.exit_code import ExitCodesNamespace
from aiida_quantumespresso.workflows.protocols.utils import ProtocolMixin

from qhc_gates.data import builtin_table
from qhc_gates.exceptions import InitialStateMismatch, NonEmbeddable, NotSymmetric
from qhc_gates.gates import GateLabel, cross_validate
from qhc_gates.synthesis import QhcGate, TruthTable, VerificationReport, synthesize, verify

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkflowResult:
    exit_code: ExitCode
    label: Optional[GateLabel] = None
    gate: Optional[QhcGate] = None
    verification: Optional[VerificationReport] = None
    cross_validation: Optional[float] = None

    @property
    def is_finished_ok(self) -> bool:
        return self.exit_code.status == 0

    def as_dict(self):
        data = {
            "exit_status": self.exit_code.status,
            "pass": self.is_finished_ok,
        }
        if self.exit_code.message:
            data["message"] = self.exit_code.message
        if self.label is not None:
            data["gate"] = self.label.value
        if self.gate is not None:
            data["orbit"] = list(self.gate.cycle.orbit)
            data["cycle_length"] = self.gate.cycle_length
            data["eigenangles"] = [float(phi) for phi in self.gate.spectrum.eigenangles]
        if self.verification is not None:
            data["verification"] = self.verification.as_dict()
            data["max_deviation"] = self.verification.max_deviation
        if self.cross_validation is not None:
            data["cross_validation"] = self.cross_validation
        return data


class QhcSynthesisWorkflow(ProtocolMixin):
    """Synthesize the QHC gate of a truth table and verify it.

    The gate is synthesized from ``table``, or from the built-in table of
    ``label`` when one is given, and then verified row by row against
    ``table``. Gates with a closed form are also compared against it on a
    uniform grid of the input sum.
    """

    exit_codes = ExitCodesNamespace(
        {
            "ERROR_NOT_SYMMETRIC": ExitCode(300, "The truth table output depends on more than the input weight."),
            "ERROR_INITIAL_STATE_MISMATCH": ExitCode(301, "The weight-0 output is not the all-zeros state."),
            "ERROR_NON_EMBEDDABLE": ExitCode(302, "The weight-indexed outputs do not form a single cycle."),
            "ERROR_VERIFICATION_FAILED": ExitCode(400, "The gate does not reproduce the truth table."),
            "ERROR_CROSS_VALIDATION_FAILED": ExitCode(401, "The spectral and closed-form unitaries disagree."),
        }
    )

    _outline = ("synthesize", "verify", "cross_validate")

    def __init__(
        self,
        table: TruthTable,
        label: Optional[GateLabel] = None,
        tolerance: float = 1e-9,
        cross_validation: Optional[dict] = None,
    ):
        self.inputs = AttributeDict(
            {
                "table": table,
                "label": label,
                "tolerance": tolerance,
                "cross_validation": cross_validation or {"enabled": False},
            }
        )
        self.ctx = AttributeDict({"label": label, "gate": None, "verification": None, "cross_validation": None})

    @classmethod
    def get_protocol_filepath(cls):
        """Return ``pathlib.Path`` to the ``.yaml`` file that defines the protocols."""
        from importlib_resources import files

        from . import protocols

        return files(protocols) / "qhc.yaml"

    @classmethod
    def get_builder_from_protocol(cls, table, label=None, protocol=None, overrides=None):
        """Return a workflow prepopulated with inputs selected according to the chosen protocol.

        :param table: the ``TruthTable`` to verify against.
        :param label: optional ``GateLabel`` whose built-in table the gate is synthesized from.
        :param protocol: protocol to use, if not specified, the default will be used.
        :param overrides: optional dictionary of inputs to override the defaults of the protocol.
        """
        inputs = cls.get_protocol_inputs(protocol, overrides)
        return cls(table, label=label, tolerance=inputs["tolerance"], cross_validation=inputs["cross_validation"])

    def report(self, message):
        LOGGER.info("%s: %s", type(self).__name__, message)

    def run(self) -> WorkflowResult:
        exit_code = ExitCode(0)
        for step in self._outline:
            exit_code = getattr(self, step)() or ExitCode(0)
            if exit_code.status:
                self.report(f"step `{step}` failed with exit status {exit_code.status}: {exit_code.message}")
                break
        return self.return_results(exit_code)

    def synthesize(self):
        """Synthesize the gate from the built-in table of the label, or from the input table."""
        source = self.inputs.table if self.inputs.label is None else builtin_table(self.inputs.label.value)
        try:
            self.ctx.gate = synthesize(source)
        except NotSymmetric:
            return self.exit_codes.ERROR_NOT_SYMMETRIC
        except InitialStateMismatch:
            return self.exit_codes.ERROR_INITIAL_STATE_MISMATCH
        except NonEmbeddable:
            return self.exit_codes.ERROR_NON_EMBEDDABLE
        if self.ctx.label is None:
            self.ctx.label = next((label for label in GateLabel if builtin_table(label.value) == source), None)
        self.report(f"synthesized a {self.ctx.gate.cycle_length}-cycle on orbit {self.ctx.gate.cycle.orbit}")
        return None

    def verify(self):
        """Apply the gate to |0…0⟩ for every row of the table."""
        self.ctx.verification = verify(self.ctx.gate, self.inputs.table, self.inputs.tolerance)
        self.report(
            f"verified {len(self.ctx.verification.rows)} rows, max deviation "
            f"{self.ctx.verification.max_deviation:.3e}"
        )
        if not self.ctx.verification.passed:
            return self.exit_codes.ERROR_VERIFICATION_FAILED
        return None

    def cross_validate(self):
        """Compare against the closed form, when the gate has one."""
        settings = self.inputs.cross_validation
        if not settings.get("enabled", False) or self.ctx.label is None:
            return None
        self.ctx.cross_validation = cross_validate(self.ctx.label, settings["grid_points"])
        self.report(f"closed form and spectral form differ by at most {self.ctx.cross_validation:.3e}")
        if self.ctx.cross_validation > settings.get("tolerance", self.inputs.tolerance):
            return self.exit_codes.ERROR_CROSS_VALIDATION_FAILED
        return None

    def return_results(self, exit_code) -> WorkflowResult:
        return WorkflowResult(
            exit_code=exit_code,
            label=self.ctx.label,
            gate=self.ctx.gate,
            verification=self.ctx.verification,
            cross_validation=self.ctx.cross_validation,
        )
