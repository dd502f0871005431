import pytest

from logiparam.cli.selfcheck import FOL_PREDICATES, enumerated_countermodel
from logiparam.logic.formula import Const, Exists, Forall, LogicId, Pred, Var
from logiparam.logic.generate import FormulaGenerator
from logiparam.logic.parser import parse_formula
from logiparam.prover.grounding import (
    ground_fol,
    herbrand_constants,
    herbrand_sequent,
    in_bernays_schoenfinkel,
    skolemize,
)
from logiparam.sat.solver import solve
from logiparam.semantics.evaluate import eval_fol


def fol(text):
    return parse_formula(text, "FOL")


@pytest.mark.prover
def test_herbrand_constants():
    assert herbrand_constants([fol("Man(socrates)"), fol("Man(plato)")]) == ("plato", "socrates")
    # a constant-free sequent still gets one element
    assert len(herbrand_constants([fol("forall x. Man(x)")])) == 1


@pytest.mark.prover
def test_bernays_schoenfinkel_fragment():
    assert in_bernays_schoenfinkel([fol("forall x. Man(x) -> Mortal(x)")])
    assert in_bernays_schoenfinkel([fol("exists x. forall y. Loves(x, y)")])
    assert not in_bernays_schoenfinkel([fol("forall x. exists y. Loves(x, y)")])
    # negation swaps the quantifiers
    assert not in_bernays_schoenfinkel([fol("~(exists x. forall y. Loves(x, y))")])


@pytest.mark.prover
def test_skolemize():
    taken = {"socrates"}
    f = skolemize(fol("exists x. Man(x) & Wise(x)"), taken)
    assert not isinstance(f, Exists)
    assert len(taken) == 2
    assert "socrates" in taken

    sequent = herbrand_sequent([fol("Man(socrates)")], fol("exists x. Man(x)"))
    # the negated goal becomes universal and needs no Skolem constant
    assert isinstance(sequent[1], Forall)


@pytest.mark.prover
def test_grounding_decides_entailment():
    theory = [fol("Man(socrates)"), fol("forall x. Man(x) -> Mortal(x)")]
    grounding = ground_fol(theory, fol("Mortal(socrates)"))
    assert grounding.constants == ("socrates",)
    assert solve(grounding.encode(refute=True).build()).unsat

    grounding = ground_fol(theory, fol("Mortal(plato)"))
    builder = grounding.encode(refute=True)
    result = solve(builder.build())
    assert result.sat
    interp = grounding.interpretation(builder, result.assignment)
    assert all(eval_fol(interp, f) for f in theory)
    assert not eval_fol(interp, fol("Mortal(plato)"))
    assert ("plato",) not in interp.relations["Mortal"]


@pytest.mark.prover
def test_grounding_atom_table():
    symmetric = fol("forall x. forall y. Loves(x, y) -> Loves(y, x)")
    grounding = ground_fol([symmetric], domain=("a", "b"))
    assert len(grounding.atoms) == 4
    assert sorted(grounding.atoms.values())[0] == ("Loves", ("a", "a"))
    assert grounding.arities == {"Loves": 2}


@pytest.mark.prover
def test_grounding_agrees_with_enumeration(rng):
    generator = FormulaGenerator(LogicId.FOL, rng, predicates=FOL_PREDICATES)
    for _ in range(25):
        theory = generator.theory(2, depth=3)
        goal = generator.formula(depth=3)
        domain = herbrand_constants(theory + [goal])

        grounding = ground_fol(theory, goal, domain=domain)
        grounded = solve(grounding.encode(refute=True).build()).sat
        enumerated = enumerated_countermodel(theory, goal, domain) is not None
        assert grounded == enumerated, f"{theory} |- {goal}"


@pytest.mark.prover
def test_enumerated_countermodel():
    x = Var("x")
    theory = [Forall("x", Pred("Man", (x,)))]
    assert enumerated_countermodel(theory, Pred("Man", (Const("a"),)), ("a", "b")) is None
    interp = enumerated_countermodel([], Pred("Man", (Const("a"),)), ("a",))
    assert interp.relations["Man"] == frozenset()
