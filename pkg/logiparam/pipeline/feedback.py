"""Symbolic feedback handed back to the formalizer after a failed iteration."""

import enum
from dataclasses import dataclass, field
from typing import List, Optional

from logiparam.logic.formula import LogicId, predicates
from logiparam.logic.printer import pretty
from logiparam.pipeline.formalizers import SyntacticError
from logiparam.prover.certificate import VerdictCertificate
from logiparam.prover.steps import StepReport
from logiparam.semantics.models import dump_model

MODAL_AXIOM = "Modal Axiom not satisfied: ○φ → Pφ"
DETACHMENT = "Conditional norm not detachable: φ ∧ ○(ψ/φ)"


class FeedbackKind(str, enum.Enum):
    MISSING_BRIDGE = "missing-bridge"
    INCONSISTENCY = "inconsistency"
    SYNTAX = "syntax"

    def __str__(self):
        return self.value


@dataclass
class InconsistencyWitness:
    """Formulas found jointly unsatisfiable by the consistency check"""

    logic: LogicId
    formulas: List[object] = field(default_factory=list)
    certificate: Optional[VerdictCertificate] = None


@dataclass
class Feedback:
    kind: FeedbackKind
    guidance: str
    failed_step: Optional[StepReport] = None
    countermodel_text: Optional[str] = None
    span: Optional[tuple] = None

    def to_dict(self):
        data = {"kind": str(self.kind), "guidance": self.guidance}
        if self.failed_step is not None:
            data["failed_index"] = self.failed_step.failed_index
            data["failed_formula"] = pretty(self.failed_step.failed_formula)
        if self.span is not None:
            data["span"] = list(self.span)
        return data


def logic_pattern(logic, formula):
    """The refinement hint quoted for ``logic``"""
    logic = LogicId.parse(logic)
    if logic is LogicId.FOL:
        names = sorted(predicates(formula)) or ["the failed formula"]
        return f"Missing premise about {', '.join(names)}"
    if logic is LogicId.KD:
        return MODAL_AXIOM
    return DETACHMENT


def _missing_bridge(report, logic):
    countermodel = dump_model(report.countermodel) if report.countermodel is not None else ""
    if report.world is not None:
        countermodel += f"failing_world: {report.world}\n"

    lines = [
        logic_pattern(logic, report.obligation),
        report.message,
        f"Unproved formula: {pretty(report.obligation)}",
    ]
    if countermodel:
        lines += ["Countermodel:", countermodel.rstrip("\n")]
    return Feedback(
        kind=FeedbackKind.MISSING_BRIDGE,
        guidance="\n".join(lines),
        failed_step=report,
        countermodel_text=countermodel or None,
    )


def _inconsistency(witness):
    listing = "\n".join(f"  {pretty(f)}" for f in witness.formulas)
    guidance = (
        "The premises and explanation steps are jointly inconsistent, so every "
        "conclusion would follow vacuously. Remove or weaken a conflicting formula.\n"
        f"Formulas checked:\n{listing}"
    )
    return Feedback(kind=FeedbackKind.INCONSISTENCY, guidance=guidance)


def _syntax(error):
    where = f" in {error.field}" if error.field else ""
    start, end = error.span
    guidance = (
        f"Syntax error ({error.category}){where}: {error.message} at bytes {start}-{end}."
    )
    if error.text:
        guidance += f"\nOffending line: {error.text}"
    return Feedback(kind=FeedbackKind.SYNTAX, guidance=guidance, span=error.span)


def build_feedback(report, logic):
    """Render feedback for a failed step, an inconsistent theory or a syntax error.

    Args:
        report (StepReport, InconsistencyWitness or SyntacticError): what went wrong
        logic (LogicId): logic of the iteration

    Returns:
        Feedback: kind, guidance text and the countermodel dump when there is one
    """
    if isinstance(report, StepReport):
        return _missing_bridge(report, logic)
    if isinstance(report, InconsistencyWitness):
        return _inconsistency(report)
    if isinstance(report, SyntacticError):
        return _syntax(report)
    raise TypeError(f"cannot build feedback from {type(report).__name__}")
