"""
The refinement loop for one case.

Every iteration runs the same four stages in order: (i) formalize, (ii) check
that the theory and the explanation steps are consistent, (iii) locate the
first step that does not follow, and (iv) on failure turn the outcome into
feedback for the next formalization. The loop ends when the explanation
verifies or after ``t`` refinements.
"""

import enum
import logging
import os
import re
from dataclasses import dataclass, field
from typing import List, Optional

import yaml

from logiparam.exceptions import BudgetExceeded, TransportError
from logiparam.logic.formula import LogicId
from logiparam.logic.printer import pretty
from logiparam.pipeline.feedback import InconsistencyWitness, build_feedback
from logiparam.pipeline.formalizers import SyntacticError, make_formalizer
from logiparam.prover.certificate import Verdict
from logiparam.prover.engine import ProverSettings, check_consistency
from logiparam.prover.steps import AllStepsEntailed, locate_failed_step
from logiparam.utils.file import create_dir, write_file
from logiparam.utils.timer import Deadline, Timer

logger = logging.getLogger(__name__)


class CaseStatus(str, enum.Enum):
    VERIFIED = "Verified"
    VERIFIED_UP_TO_BOUND = "VerifiedUpToBound"
    FAILED = "Failed"
    SYNTACTIC_ERROR = "SyntacticError"
    INCONSISTENT = "Inconsistent"
    TIMEOUT = "Timeout"

    def __str__(self):
        return self.value

    @property
    def success(self):
        return self in (CaseStatus.VERIFIED, CaseStatus.VERIFIED_UP_TO_BOUND)


@dataclass
class IterationTrace:
    iteration: int
    status: CaseStatus
    formalization: Optional[object] = None
    syntax_error: Optional[SyntacticError] = None
    consistency: Optional[object] = None
    report: Optional[object] = None
    feedback: Optional[object] = None
    solving_time: float = 0.0

    def to_dict(self):
        data = {"iteration": self.iteration, "status": str(self.status)}
        if self.formalization is not None:
            data["formalization"] = self.formalization.to_text()
        if self.syntax_error is not None:
            data["syntax_error"] = self.syntax_error.to_dict()
        if self.consistency is not None:
            data["consistency"] = self.consistency.to_dict()
        if isinstance(self.report, AllStepsEntailed):
            data["steps"] = {
                "verdicts": [str(cert.verdict) for cert in self.report.certificates],
                "up_to_bound": self.report.up_to_bound,
            }
        elif self.report is not None:
            data["failed_step"] = {
                "index": self.report.failed_index,
                "formula": pretty(self.report.failed_formula),
                "obligation": pretty(self.report.obligation),
                "message": self.report.message,
                "certificate": self.report.certificate.to_dict(),
            }
        if self.feedback is not None:
            data["feedback"] = self.feedback.to_dict()
        data["solving_time_ms"] = self.solving_time
        return data


@dataclass
class CaseOutcome:
    case_id: str
    domain: str
    logic: LogicId
    formalizer: str
    status: CaseStatus
    iterations_used: int = 0
    traces: List[IterationTrace] = field(default_factory=list)
    solving_time: float = 0.0
    error_category: Optional[str] = None

    @property
    def success(self):
        return self.status.success

    def record(self):
        """The flat per-case record written to the case log"""
        return {
            "case": self.case_id,
            "domain": self.domain,
            "logic": str(self.logic),
            "formalizer": self.formalizer,
            "status": str(self.status),
            "iterations": self.iterations_used,
            "solving_ms": self.solving_time,
            "attempts": len(self.traces),
            "syntax_errors": sum(1 for trace in self.traces if trace.syntax_error is not None),
            "error_category": self.error_category,
        }

    def to_dict(self):
        data = self.record()
        data["trace"] = [trace.to_dict() for trace in self.traces]
        return data


def _stage_time(timer, timing):
    return timer.duration() if timing == "wall" else 0.0


def run_case(
    problem,
    logic,
    spec,
    t=3,
    bounds=None,
    settings=None,
    case_seconds=60,
    client=None,
    timing="wall",
):
    """Run the formalize / check / prove / refine loop on one case.

    Args:
        problem (ProblemDoc): the case
        logic (LogicId): target logic
        spec (FormalizerSpec): formalizer to use
        t (int): number of refinement iterations after the first attempt
        bounds (list, optional): world bounds, default from ``settings``
        settings (ProverSettings, optional): prover budgets and consequence relation
        case_seconds (float): wall-clock budget of the whole case
        client (ChatClient, optional): remote client shared across cases
        timing (str): ``wall`` records prover time, ``off`` records zero

    Returns:
        CaseOutcome: final status, iterations used and the full trace
    """
    if t < 1:
        raise ValueError(f"iteration budget must be at least 1, got {t}")

    logic = LogicId.parse(logic)
    settings = settings or ProverSettings()
    formalizer = make_formalizer(spec, client=client)
    deadline = Deadline(case_seconds)

    outcome = CaseOutcome(problem.id, problem.domain, logic, spec.name, CaseStatus.FAILED)
    feedback = None
    previous = None

    for iteration in range(t + 1):
        outcome.iterations_used = iteration
        if deadline.expired():
            outcome.status = CaseStatus.TIMEOUT
            break

        # (i) formalize
        try:
            result = formalizer.formalize(problem, logic, feedback=feedback, previous=previous)
        except TransportError as err:
            logger.warning(f"{problem.id}/{logic}: transport failure: {err.msg}")
            outcome.status = CaseStatus.TIMEOUT
            outcome.traces.append(IterationTrace(iteration, CaseStatus.TIMEOUT))
            break

        if isinstance(result, SyntacticError):
            feedback = build_feedback(result, logic)
            trace = IterationTrace(
                iteration, CaseStatus.SYNTACTIC_ERROR, syntax_error=result, feedback=feedback
            )
            outcome.traces.append(trace)
            outcome.status = CaseStatus.SYNTACTIC_ERROR
            outcome.error_category = result.category
            logger.info(
                f"{problem.id}/{logic} iteration {iteration}: syntax error ({result.category})"
            )
            continue

        trace = IterationTrace(iteration, CaseStatus.FAILED, formalization=result)
        outcome.traces.append(trace)
        previous = result
        timer = Timer()

        # (ii) consistency of theory and steps
        formulas = list(result.theory) + list(result.steps)
        with timer:
            consistency = check_consistency(
                logic, formulas, bounds=bounds, settings=settings, deadline=deadline
            )
        trace.consistency = consistency

        if consistency.timed_out:
            trace.status = outcome.status = CaseStatus.TIMEOUT
            trace.solving_time = _stage_time(timer, timing)
            break
        if consistency.verdict is not Verdict.CONSISTENT:
            feedback = build_feedback(InconsistencyWitness(logic, formulas, consistency), logic)
            trace.feedback = feedback
            trace.status = outcome.status = CaseStatus.INCONSISTENT
            trace.solving_time = _stage_time(timer, timing)
            outcome.error_category = None
            logger.info(f"{problem.id}/{logic} iteration {iteration}: {consistency.verdict}")
            continue

        # (iii) locate the first failing step
        try:
            with timer:
                report = locate_failed_step(
                    logic,
                    result.theory,
                    result.steps,
                    result.goal,
                    bounds=bounds,
                    settings=settings,
                    deadline=deadline,
                )
        except BudgetExceeded as err:
            logger.warning(f"{problem.id}/{logic} iteration {iteration}: {err.msg}")
            trace.status = outcome.status = CaseStatus.TIMEOUT
            trace.solving_time = _stage_time(timer, timing)
            break

        trace.report = report
        trace.solving_time = _stage_time(timer, timing)

        if isinstance(report, AllStepsEntailed):
            status = CaseStatus.VERIFIED_UP_TO_BOUND if report.up_to_bound else CaseStatus.VERIFIED
            trace.status = outcome.status = status
            outcome.error_category = None
            logger.info(f"{problem.id}/{logic} iteration {iteration}: {status}")
            break

        # (iv) feedback for the next attempt
        feedback = build_feedback(report, logic)
        trace.feedback = feedback
        trace.status = outcome.status = CaseStatus.FAILED
        outcome.error_category = None
        logger.info(
            f"{problem.id}/{logic} iteration {iteration}: position {report.failed_index} failed"
        )

    outcome.solving_time = round(sum(trace.solving_time for trace in outcome.traces), 3)
    return outcome


def trace_filename(outcome):
    name = f"{outcome.case_id}__{outcome.logic}__{outcome.formalizer}"
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name) + ".yml"


def write_trace(outcome, directory):
    """Write the YAML trace of ``outcome`` into ``directory`` and return its path"""
    create_dir(directory)
    path = os.path.join(directory, trace_filename(outcome))
    write_file(path, yaml.safe_dump(outcome.to_dict(), sort_keys=False, allow_unicode=True))
    return path
