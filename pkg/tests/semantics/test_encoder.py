import pytest

from logiparam.exceptions import EncodingError, LogicMismatchError
from logiparam.logic.formula import LogicId
from logiparam.logic.parser import parse_formula
from logiparam.sat.solver import solve
from logiparam.semantics.encoder import Consequence, Mode, encode_bounded
from logiparam.semantics.evaluate import eval_fol, evaluate, globally_valid
from logiparam.semantics.models import (
    CJModel,
    FolInterp,
    KripkeModel,
    PreferenceModel,
    validate_model,
)


def formulas(logic, *texts):
    return [parse_formula(text, logic) for text in texts]


def find_model(
    logic, theory, goal=None, bounds=(1, 2, 3), consequence=Consequence.LOCAL, serial=True
):
    """Decode the first model found by sweeping ``bounds``, or None"""
    mode = Mode.REFUTATION if goal is not None else Mode.CONSISTENCY
    for k in bounds:
        cnf, decoder = encode_bounded(
            logic, theory, mode, goal=goal, k=k, consequence=consequence, serial=serial
        )
        result = solve(cnf)
        if result.sat:
            return decoder.decode(result.assignment)
    return None


@pytest.mark.semantics
def test_kd_seriality():
    theory = formulas("KD", "O(p)", "O(~p)")
    assert find_model("KD", theory, bounds=(1, 2, 3, 4)) is None

    # plain K allows the dead end that makes both obligations hold
    witness = find_model("KD", theory, bounds=(1,), serial=False)
    assert isinstance(witness.model, KripkeModel)
    assert witness.model.successors(0) == frozenset()


@pytest.mark.semantics
def test_kd_countermodel_is_confirmed():
    (goal,) = formulas("KD", "O(p) -> p")
    witness = find_model("KD", [], goal)
    assert witness is not None
    assert witness.world == 0
    assert validate_model(witness.model) == []
    assert not evaluate(witness.model, 0, goal)


@pytest.mark.semantics
def test_global_consequence_reports_failing_world():
    theory = formulas("KD", "p -> O(q)")
    (goal,) = formulas("KD", "p -> q")
    witness = find_model("KD", theory, goal, consequence=Consequence.GLOBAL)
    assert witness is not None
    assert globally_valid(witness.model, theory[0])
    assert not evaluate(witness.model, witness.world, goal)


@pytest.mark.semantics
def test_factual_detachment_fails_in_ddle():
    theory = formulas("DDLE", "p", "O(q|p)")
    (goal,) = formulas("DDLE", "O(q)")
    witness = find_model("DDLE", theory, goal)
    assert witness is not None
    model = witness.model
    assert isinstance(model, PreferenceModel)
    assert len(model.worlds) <= 3
    assert validate_model(model) == []
    assert all(evaluate(model, 0, f) for f in theory)
    assert not evaluate(model, 0, goal)


@pytest.mark.semantics
def test_deontic_detachment_holds_in_ddle():
    theory = formulas("DDLE", "O(q|p)", "O(p|true)")
    (goal,) = formulas("DDLE", "O(q|true)")
    assert find_model("DDLE", theory, goal, bounds=(1, 2, 3, 4)) is None


@pytest.mark.semantics
def test_strengthening_the_antecedent_fails_in_ddle():
    theory = formulas("DDLE", "O(q|p)")
    (goal,) = formulas("DDLE", "O(q|p & r)")
    witness = find_model("DDLE", theory, goal)
    assert witness is not None
    assert not evaluate(witness.model, 0, goal)


@pytest.mark.semantics
@pytest.mark.parametrize("logic", [LogicId.DDLE, LogicId.DDL_CJ])
def test_chisholm_set_is_consistent(logic):
    theory = formulas(logic, "O(go)", "O(tell|go)", "O(~tell|~go)", "~go")
    witness = find_model(logic, theory, bounds=(1, 2, 3))
    assert witness is not None
    print(witness.model)
    assert validate_model(witness.model) == []
    assert all(evaluate(witness.model, 0, f) for f in theory)
    if logic is LogicId.DDL_CJ:
        assert isinstance(witness.model, CJModel)


@pytest.mark.semantics
def test_cj_factual_detachment_with_settledness():
    # detachment is recovered once the condition is settled and the obligation is possible
    theory = formulas("DDL_CJ", "Box p", "O(q|p)", "Dia (p & q)")
    (goal,) = formulas("DDL_CJ", "O(q|true)")
    assert find_model("DDL_CJ", theory, goal, bounds=(1, 2, 3)) is None


@pytest.mark.semantics
def test_fol_grounding_encoder():
    theory = formulas("FOL", "Man(socrates)", "forall x. Man(x) -> Mortal(x)")
    (goal,) = formulas("FOL", "Mortal(socrates)")
    assert find_model("FOL", theory, goal, bounds=(1, 2)) is None

    (other,) = formulas("FOL", "Mortal(plato)")
    witness = find_model("FOL", theory, other, bounds=(1,))
    assert isinstance(witness.model, FolInterp)
    assert witness.world is None
    assert set(witness.model.domain) == {"plato", "socrates"}
    assert all(eval_fol(witness.model, f) for f in theory)
    assert not eval_fol(witness.model, other)


@pytest.mark.semantics
def test_fol_anonymous_elements():
    (theory,) = formulas("FOL", "exists x. ~Man(x)")
    _, decoder = encode_bounded("FOL", [theory], k=3)
    assert len(decoder.unrolling.domain) == 3


@pytest.mark.semantics
def test_encoder_errors():
    (f,) = formulas("KD", "O(p)")
    with pytest.raises(EncodingError):
        encode_bounded("KD", [f], k=6)
    with pytest.raises(EncodingError):
        encode_bounded("KD", [f], k=0)
    with pytest.raises(EncodingError):
        encode_bounded("KD", [f], Mode.REFUTATION, k=1)
    # a raised maximum admits larger bounds
    cnf, decoder = encode_bounded("KD", [f], k=6, max_bound=6)
    assert decoder.k == 6

    (dyadic,) = formulas("DDLE", "O(q|p)")
    with pytest.raises(LogicMismatchError):
        encode_bounded("KD", [dyadic], k=1)


@pytest.mark.semantics
def test_encoding_is_deterministic():
    theory = formulas("DDL_CJ", "O(go)", "O(tell|go)")
    first, _ = encode_bounded("DDL_CJ", theory, k=2)
    second, _ = encode_bounded("DDL_CJ", theory, k=2)
    assert first.clauses == second.clauses
    assert solve(first).assignment == solve(second).assignment
