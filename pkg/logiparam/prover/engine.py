"""
Consistency and entailment checks.

Both checks first sweep the configured bounds with the bounded model finder.
A model found at any bound settles the question. When every bound is
exhausted, KD theories are decided by the tableau and FOL sequents in the
Bernays-Schoenfinkel fragment by Herbrand grounding; the remaining cases end
as ``EntailedUpToBound`` (entailment) or ``Unknown`` (consistency).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from logiparam.defaults import FALLBACK_BOUNDS, FALLBACK_CONSEQUENCE, FALLBACK_MAX_BOUND
from logiparam.exceptions import BudgetExceeded, LogicMismatchError, ModelError
from logiparam.logic.formula import BOT, Impl, LogicId, Not, conj
from logiparam.logic.signature import well_formed
from logiparam.prover.certificate import Verdict, VerdictCertificate
from logiparam.prover.grounding import ground_fol, herbrand_sequent, in_bernays_schoenfinkel
from logiparam.prover.tableau import kd_tableau
from logiparam.sat.solver import solve
from logiparam.semantics.encoder import Consequence, Mode, encode_bounded
from logiparam.semantics.evaluate import eval_fol, evaluate, globally_valid
from logiparam.semantics.models import FolInterp
from logiparam.utils.timer import Deadline, Timer

logger = logging.getLogger(__name__)


@dataclass
class ProverSettings:
    """Bounds, consequence relation and budgets used by every prover check"""

    bounds: Dict[str, List[int]] = field(default_factory=lambda: dict(FALLBACK_BOUNDS))
    max_bound: Dict[str, int] = field(default_factory=lambda: dict(FALLBACK_MAX_BOUND))
    consequence: Dict[str, str] = field(default_factory=lambda: dict(FALLBACK_CONSEQUENCE))
    check_seconds: Optional[float] = 5
    max_decisions: Optional[int] = 200000
    serial: bool = True

    @classmethod
    def from_configuration(cls, configuration):
        """Build settings from an :class:`~logiparam.config.EngineConfiguration`"""
        logics = [str(logic) for logic in LogicId]
        return cls(
            bounds={logic: configuration.bounds(logic) for logic in logics},
            max_bound={logic: configuration.max_bound(logic) for logic in logics},
            consequence={logic: configuration.consequence(logic) for logic in logics},
            check_seconds=configuration.check_seconds,
            max_decisions=configuration.max_decisions,
        )

    def bounds_for(self, logic):
        return list(self.bounds[str(logic)])

    def max_bound_for(self, logic):
        return self.max_bound[str(logic)]

    def consequence_for(self, logic):
        return Consequence(self.consequence[str(logic)])


def _check_logic(logic, formulas):
    for f in formulas:
        report = well_formed(f, logic)
        if not report.ok:
            raise LogicMismatchError(
                f"'{f}' is not well-formed for {logic}",
                *[violation.message for violation in report.violations],
            )


def _holds(model, f, consequence):
    if isinstance(model, FolInterp):
        return eval_fol(model, f)
    if consequence is Consequence.GLOBAL:
        return globally_valid(model, f)
    return evaluate(model, 0, f)


def _confirm(model, theory, consequence, goal=None, world=None):
    """Re-check a decoded witness with the evaluators"""
    for f in theory:
        if not _holds(model, f, consequence):
            raise ModelError(f"decoded witness does not satisfy '{f}'")
    if goal is None:
        return
    if isinstance(model, FolInterp):
        fails = not eval_fol(model, goal)
    else:
        fails = not evaluate(model, world, goal)
    if not fails:
        raise ModelError(f"decoded witness does not falsify '{goal}'")


class _Check:
    """One consistency or entailment check with its own deadline and timer"""

    def __init__(self, logic, theory, goal, bounds, settings, deadline):
        self.logic = LogicId.parse(logic)
        self.theory = list(theory)
        self.goal = goal
        self.settings = settings or ProverSettings()
        self.bounds = list(bounds) if bounds is not None else self.settings.bounds_for(self.logic)
        self.consequence = self.settings.consequence_for(self.logic)
        outer = deadline or Deadline(None)
        self.deadline = outer.child(self.settings.check_seconds)
        self.timer = Timer()
        self.searched = []

        _check_logic(self.logic, self.theory + ([goal] if goal is not None else []))

    def certificate(self, verdict, **kwargs):
        self.timer.stop()
        cert = VerdictCertificate(
            verdict, bounds_searched=list(self.searched), elapsed=self.timer.duration(), **kwargs
        )
        logger.debug(
            f"{self.logic} {'entailment' if self.goal is not None else 'consistency'} check: "
            f"{cert.verdict} via {cert.method} after bounds {cert.bounds_searched}"
        )
        return cert

    def sweep(self, mode):
        """Return ``(witness, timed_out)`` for the first satisfiable bound"""
        for k in self.bounds:
            cnf, decoder = encode_bounded(
                self.logic,
                self.theory,
                mode,
                goal=self.goal,
                k=k,
                consequence=self.consequence,
                serial=self.settings.serial,
                max_bound=self.settings.max_bound_for(self.logic),
            )
            result = solve(cnf, max_decisions=self.settings.max_decisions, deadline=self.deadline)
            self.searched.append(k)
            logger.debug(
                f"{self.logic} k={k}: {result.status.value} after {result.decisions} decisions"
            )
            if result.timeout:
                return None, True
            if result.sat:
                witness = decoder.decode(result.assignment)
                _confirm(witness.model, self.theory, self.consequence, self.goal, witness.world)
                return witness, False
        return None, False

    def herbrand(self):
        """Decide a FOL sequent by grounding its Skolem form over the Herbrand constants.

        Returns the satisfying interpretation, None when unsatisfiable, or raises
        BudgetExceeded.
        """
        sequent = herbrand_sequent(self.theory, self.goal)
        grounding = ground_fol(sequent)
        builder = grounding.encode()
        result = solve(
            builder.build(), max_decisions=self.settings.max_decisions, deadline=self.deadline
        )
        if result.timeout:
            raise BudgetExceeded("Herbrand grounding exceeded its budget")
        if result.unsat:
            return None
        model = grounding.interpretation(builder, result.assignment)
        _confirm(model, self.theory, self.consequence, self.goal)
        return model

    def tableau(self):
        if self.goal is None:
            goal = BOT
        else:
            goal = self.goal
        if self.consequence is Consequence.GLOBAL:
            return kd_tableau(goal, global_assumptions=self.theory, deadline=self.deadline)
        return kd_tableau(Impl(conj(self.theory), goal), deadline=self.deadline)


def check_consistency(logic, theory, bounds=None, settings=None, deadline=None):
    """Look for a model of ``theory``.

    Args:
        logic (LogicId): logic of the theory
        theory (list): formulas that must hold together
        bounds (list, optional): world bounds to sweep, default from ``settings``
        settings (ProverSettings, optional): budgets and consequence relation
        deadline (Deadline, optional): enclosing budget, e.g. of a pipeline case

    Returns:
        VerdictCertificate: Consistent with a witness, Inconsistent, or Unknown
    """
    check = _Check(logic, theory, None, bounds, settings, deadline)
    check.timer.start()

    witness, timed_out = check.sweep(Mode.CONSISTENCY)
    if timed_out:
        return check.certificate(Verdict.UNKNOWN, timed_out=True)
    if witness is not None:
        return check.certificate(Verdict.CONSISTENT, witness=witness.model)

    try:
        if check.logic is LogicId.KD:
            outcome = check.tableau()
            if outcome.valid:
                return check.certificate(
                    Verdict.INCONSISTENT, proof=outcome.trace, method="tableau"
                )
            return check.certificate(Verdict.CONSISTENT, witness=outcome.model, method="tableau")

        if check.logic is LogicId.FOL and in_bernays_schoenfinkel(check.theory):
            model = check.herbrand()
            if model is None:
                return check.certificate(Verdict.INCONSISTENT, method="grounding")
            return check.certificate(Verdict.CONSISTENT, witness=model, method="grounding")
    except BudgetExceeded:
        return check.certificate(Verdict.UNKNOWN, timed_out=True)

    return check.certificate(Verdict.UNKNOWN)


def check_entailment(logic, theory, goal, bounds=None, settings=None, deadline=None):
    """Decide whether ``theory`` entails ``goal``.

    Callers enforcing the vacuity guard run :func:`check_consistency` first.

    Returns:
        VerdictCertificate: Refuted with an evaluator-confirmed countermodel,
        Entailed (tableau or grounding), EntailedUpToBound, or Unknown on budget exhaustion

    Raises:
        LogicMismatchError: if a formula is not well-formed for ``logic``
    """
    check = _Check(logic, theory, goal, bounds, settings, deadline)
    check.timer.start()

    witness, timed_out = check.sweep(Mode.REFUTATION)
    if timed_out:
        return check.certificate(Verdict.UNKNOWN, timed_out=True)
    if witness is not None:
        return check.certificate(Verdict.REFUTED, witness=witness.model, world=witness.world)

    try:
        if check.logic is LogicId.KD:
            outcome = check.tableau()
            if outcome.valid:
                return check.certificate(Verdict.ENTAILED, proof=outcome.trace, method="tableau")
            _confirm(outcome.model, check.theory, check.consequence, goal, outcome.world)
            return check.certificate(
                Verdict.REFUTED, witness=outcome.model, world=outcome.world, method="tableau"
            )

        if check.logic is LogicId.FOL and in_bernays_schoenfinkel(check.theory + [Not(goal)]):
            model = check.herbrand()
            if model is None:
                return check.certificate(Verdict.ENTAILED, method="grounding")
            return check.certificate(Verdict.REFUTED, witness=model, method="grounding")
    except BudgetExceeded:
        return check.certificate(Verdict.UNKNOWN, timed_out=True)

    return check.certificate(Verdict.ENTAILED_UP_TO_BOUND)
