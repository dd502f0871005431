import pytest

from logiparam.exceptions import BudgetExceeded
from logiparam.logic.formula import Exists, LogicId, Or
from logiparam.logic.generate import FormulaGenerator
from logiparam.logic.parser import parse_formula
from logiparam.problems.parser import parse_problem_file
from logiparam.prover.engine import check_entailment
from logiparam.prover.steps import (
    AllStepsEntailed,
    StepReport,
    locate_failed_step,
    proof_obligation,
)
from logiparam.semantics.evaluate import evaluate
from logiparam.utils.timer import Deadline


@pytest.fixture
def autonomy_case(fixture_file):
    cases = parse_problem_file(fixture_file("bioethics"))
    return next(c for c in cases if c.id == "bioethics-autonomy-competent-choice")


def locate(formalization, **kwargs):
    return locate_failed_step(
        formalization.logic,
        formalization.theory,
        formalization.steps,
        formalization.goal,
        **kwargs,
    )


@pytest.mark.prover
def test_proof_obligations():
    rule = parse_formula("p & q -> O(r)", "KD")
    assert proof_obligation(rule, "KD") == rule.left
    assert proof_obligation(rule, "KD", claim=True) == rule

    universal = parse_formula("forall x. Man(x) -> Mortal(x)", "FOL")
    obligation = proof_obligation(universal, "FOL")
    assert isinstance(obligation, Exists)
    assert obligation == parse_formula("exists x. Man(x)", "FOL")

    conditional = parse_formula("O(q|p)", "DDLE")
    assert proof_obligation(conditional, "DDLE") == conditional.antecedent
    unconditional = parse_formula("O(q)", "DDLE")
    assert proof_obligation(unconditional, "DDLE") == unconditional

    fact = parse_formula("O(p)", "KD")
    assert proof_obligation(fact, "KD") == fact


@pytest.mark.prover
def test_gold_explanation_is_entailed(autonomy_case):
    outcome = locate(autonomy_case.gold[LogicId.KD])
    assert isinstance(outcome, AllStepsEntailed)
    assert len(outcome.certificates) == 5
    assert not outcome.up_to_bound


@pytest.mark.prover
def test_missing_last_step_blames_hypothesis(autonomy_case):
    gold = autonomy_case.gold[LogicId.KD]
    report = locate(gold.without_step(3))
    assert isinstance(report, StepReport)
    assert report.failed_index == 3
    assert report.is_hypothesis
    assert report.failed_formula == gold.goal
    assert report.countermodel is not None
    assert not evaluate(report.countermodel, report.world, gold.goal)
    print(report.message)


@pytest.mark.prover
def test_missing_bridge_blames_first_dependent_step(autonomy_case):
    gold = autonomy_case.gold[LogicId.KD]
    # without the wellbeing rule the final rule's condition is not established
    report = locate(gold.without_step(1))
    assert report.failed_index == 2
    assert not report.is_hypothesis
    assert report.failed_formula == gold.steps[3]
    assert report.obligation == gold.steps[3].left
    assert "cannot be applied" in report.message


@pytest.mark.prover
def test_first_order_explanation(autonomy_case):
    gold = autonomy_case.gold[LogicId.FOL]
    assert isinstance(locate(gold), AllStepsEntailed)

    report = locate(gold.without_step(2))
    assert isinstance(report, StepReport)
    assert report.failed_index == 2


@pytest.mark.prover
def test_budget_exhaustion_raises(autonomy_case):
    with pytest.raises(BudgetExceeded) as err:
        locate(autonomy_case.gold[LogicId.KD], deadline=Deadline(0))
    assert err.value.certificate.timed_out


@pytest.mark.prover
def test_independent_step_fails_first():
    p, q, r = (parse_formula(name, "KD") for name in "pqr")
    report = locate_failed_step("KD", [p], [q], r)
    assert isinstance(report, StepReport)
    assert report.failed_index == 0
    assert not report.is_hypothesis
    assert report.failed_formula == q
    assert "'q'" in report.message
    assert evaluate(report.countermodel, report.world, p)
    assert not evaluate(report.countermodel, report.world, q)


@pytest.mark.prover
def test_modus_ponens_chain_is_entailed():
    p, rule, q = (parse_formula(text, "KD") for text in ("p", "p -> q", "q"))
    outcome = locate_failed_step("KD", [p, rule], [q], q)
    assert isinstance(outcome, AllStepsEntailed)
    assert len(outcome.certificates) == 2


@pytest.mark.prover
@pytest.mark.slow
def test_failed_index_is_minimal(rng):
    generator = FormulaGenerator("KD", rng, atoms=("p", "q"), max_modal_depth=1)
    reports = 0
    for _ in range(12):
        premises = generator.theory(2, depth=2)
        steps = generator.theory(3, depth=2)
        hypothesis = generator.formula(2)
        report = locate_failed_step("KD", premises, steps, hypothesis)
        if not isinstance(report, StepReport):
            continue
        reports += 1
        assert report.is_hypothesis == (report.failed_index == len(steps))
        for j in range(report.failed_index):
            obligation = proof_obligation(steps[j], "KD")
            cert = check_entailment("KD", premises + steps[:j], obligation)
            assert not cert.refuted, f"position {j} is refuted before {report.failed_index}"
    assert reports


@pytest.mark.prover
def test_entailment_is_monotone(rng):
    generator = FormulaGenerator("KD", rng, atoms=("p", "q"), max_modal_depth=1)
    entailed = 0
    for _ in range(10):
        theory = generator.theory(2, depth=2)
        for goal in (generator.formula(2), Or(theory[0], generator.formula(2))):
            if not check_entailment("KD", theory, goal).entailed:
                continue
            entailed += 1
            extra = generator.formula(2)
            cert = check_entailment("KD", theory + [extra], goal)
            assert not cert.refuted, f"{goal} lost after adding {extra} to {theory}"
    assert entailed >= 10
