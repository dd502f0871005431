"""
Localization of the first explanation step that does not follow.

The explanation is read as a chain. Position ``i`` is checked against the
premises together with every step before it; the hypothesis is the last
position. A step that states a rule (an implication, a universally closed
implication in FOL, or a conditional obligation with a non-trivial condition
in the conditional logics) is accepted once its condition is established, and
is then available to later positions. Any other step is a claim and must be
entailed itself.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from logiparam.exceptions import BudgetExceeded
from logiparam.logic.formula import Exists, Forall, Impl, LogicId, ObC, Top
from logiparam.prover.certificate import Verdict, VerdictCertificate
from logiparam.prover.engine import check_entailment

logger = logging.getLogger(__name__)


@dataclass
class StepReport:
    failed_index: int
    failed_formula: object
    obligation: object
    countermodel: object
    world: Optional[int] = None
    message: str = ""
    certificate: Optional[VerdictCertificate] = None
    is_hypothesis: bool = False


@dataclass
class AllStepsEntailed:
    certificates: List[VerdictCertificate] = field(default_factory=list)

    @property
    def up_to_bound(self):
        return any(cert.verdict is Verdict.ENTAILED_UP_TO_BOUND for cert in self.certificates)


def _strip_universals(f):
    variables = []
    while isinstance(f, Forall):
        variables.append(f.var)
        f = f.body
    return variables, f


def proof_obligation(step, logic, claim=False):
    """The formula that must be entailed before ``step`` can be accepted"""
    logic = LogicId.parse(logic)
    if claim:
        return step
    if isinstance(step, Impl):
        return step.left
    if logic is LogicId.FOL and isinstance(step, Forall):
        variables, body = _strip_universals(step)
        if isinstance(body, Impl):
            condition = body.left
            for var in reversed(variables):
                condition = Exists(var, condition)
            return condition
    if logic.dyadic and isinstance(step, ObC) and not isinstance(step.antecedent, Top):
        return step.antecedent
    return step


def locate_failed_step(
    logic, premises, steps, hypothesis, bounds=None, settings=None, deadline=None
):
    """Return the first position of ``steps + [hypothesis]`` that does not follow.

    Returns:
        StepReport or AllStepsEntailed

    Raises:
        BudgetExceeded: if a check runs out of budget before a verdict is reached
    """
    logic = LogicId.parse(logic)
    context = list(premises)
    chain = list(steps) + [hypothesis]
    certificates = []

    for index, formula in enumerate(chain):
        last = index == len(chain) - 1
        obligation = proof_obligation(formula, logic, claim=last)
        cert = check_entailment(
            logic, context, obligation, bounds=bounds, settings=settings, deadline=deadline
        )
        logger.debug(f"position {index} ({formula}): {cert.verdict}")

        if cert.verdict is Verdict.UNKNOWN:
            raise BudgetExceeded(
                f"no verdict for position {index} within the budget", certificate=cert
            )
        if cert.refuted:
            what = "hypothesis" if last else f"step {index + 1}"
            if obligation == formula:
                message = (
                    f"{what} '{formula}' does not follow from the premises and preceding steps"
                )
            else:
                message = (
                    f"{what} '{formula}' cannot be applied: its condition '{obligation}' "
                    "does not follow from the premises and preceding steps"
                )
            return StepReport(
                failed_index=index,
                failed_formula=formula,
                obligation=obligation,
                countermodel=cert.witness,
                world=cert.world,
                message=message,
                certificate=cert,
                is_hypothesis=last,
            )

        certificates.append(cert)
        context.append(formula)

    return AllStepsEntailed(certificates)
