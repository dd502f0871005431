import pytest

from logiparam.exceptions import ParseError
from logiparam.logic.formula import LogicId
from logiparam.logic.parser import parse_formula
from logiparam.pipeline.feedback import (
    DETACHMENT,
    MODAL_AXIOM,
    FeedbackKind,
    InconsistencyWitness,
    build_feedback,
    logic_pattern,
)
from logiparam.pipeline.formalizers import SyntacticError
from logiparam.prover.steps import locate_failed_step


@pytest.mark.pipeline
def test_logic_patterns():
    assert logic_pattern("KD", parse_formula("O(p)", "KD")) == MODAL_AXIOM
    assert logic_pattern("DDLE", parse_formula("O(q|p)", "DDLE")) == DETACHMENT
    assert logic_pattern("DDL_CJ", parse_formula("O(q|p)", "DDL_CJ")) == DETACHMENT
    hint = logic_pattern("FOL", parse_formula("Man(a) & Mortal(a)", "FOL"))
    assert hint == "Missing premise about Man, Mortal"


@pytest.mark.pipeline
def test_missing_bridge_feedback(autonomy_case):
    gold = autonomy_case.gold[LogicId.KD].without_step(3)
    report = locate_failed_step("KD", gold.theory, gold.steps, gold.goal)
    feedback = build_feedback(report, "KD")
    print(feedback.guidance)
    assert feedback.kind is FeedbackKind.MISSING_BRIDGE
    assert feedback.guidance.startswith(MODAL_AXIOM)
    assert "Unproved formula: O(give_treatment)" in feedback.guidance
    assert "failing_world" in feedback.countermodel_text
    assert feedback.to_dict()["failed_index"] == 3


@pytest.mark.pipeline
def test_inconsistency_feedback():
    formulas = [parse_formula("O(p)", "KD"), parse_formula("O(~p)", "KD")]
    feedback = build_feedback(InconsistencyWitness(LogicId.KD, formulas), "KD")
    assert feedback.kind is FeedbackKind.INCONSISTENCY
    assert "O(~p)" in feedback.guidance
    assert feedback.to_dict() == {"kind": "inconsistency", "guidance": feedback.guidance}


@pytest.mark.pipeline
def test_syntax_feedback():
    error = ParseError("unexpected end of input", span=(7, 7), category="grammar", field="goal")
    feedback = build_feedback(SyntacticError(error, "raw", "O(p) ->"), "KD")
    assert feedback.kind is FeedbackKind.SYNTAX
    assert feedback.span == (7, 7)
    assert "in goal" in feedback.guidance
    assert "Offending line: O(p) ->" in feedback.guidance

    with pytest.raises(TypeError):
        build_feedback("not a report", "KD")
