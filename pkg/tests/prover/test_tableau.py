import pytest

from logiparam.cli.selfcheck import bounded_kd_valid
from logiparam.exceptions import BudgetExceeded, LogicMismatchError
from logiparam.logic.formula import LogicId
from logiparam.logic.generate import FormulaGenerator
from logiparam.logic.parser import parse_formula
from logiparam.logic.printer import pretty
from logiparam.prover.tableau import kd_tableau
from logiparam.semantics.evaluate import evaluate, globally_valid
from logiparam.semantics.models import validate_model
from logiparam.utils.timer import Deadline


def kd(text):
    return parse_formula(text, "KD")


@pytest.mark.prover
@pytest.mark.parametrize("text", ["O(p) -> P(p)", "O(p -> q) -> (O(p) -> O(q))", "~(O(p) & O(~p))"])
def test_valid_formulas_close(text):
    outcome = kd_tableau(kd(text))
    assert outcome.valid
    assert outcome.nodes > 0
    assert outcome.trace


@pytest.mark.prover
@pytest.mark.parametrize("text", ["O(p) -> p", "P(p) -> O(p)", "O(O(p)) -> O(p)", "p -> O(p)"])
def test_countermodels_falsify_root(text):
    f = kd(text)
    outcome = kd_tableau(f)
    assert not outcome.valid
    assert validate_model(outcome.model) == []
    assert not evaluate(outcome.model, outcome.world, f)


@pytest.mark.prover
def test_global_assumptions():
    assumptions = [kd("p")]
    assert kd_tableau(kd("O(p)"), global_assumptions=assumptions).valid

    outcome = kd_tableau(kd("O(q)"), global_assumptions=assumptions)
    assert not outcome.valid
    assert globally_valid(outcome.model, kd("p"))


@pytest.mark.prover
def test_tableau_errors():
    with pytest.raises(LogicMismatchError):
        kd_tableau(parse_formula("O(q|p)", "DDLE"))
    with pytest.raises(BudgetExceeded):
        kd_tableau(kd("O(p) -> P(p)"), deadline=Deadline(0))


@pytest.mark.prover
@pytest.mark.slow
def test_tableau_agrees_with_bounded_search(rng):
    generator = FormulaGenerator(LogicId.KD, rng, max_modal_depth=2)
    disagreements = []
    for _ in range(500):
        f = generator.formula(depth=4)
        if kd_tableau(f).valid != bounded_kd_valid(f):
            disagreements.append(pretty(f))
    assert disagreements == []
