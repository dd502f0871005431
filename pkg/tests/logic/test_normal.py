import pytest

from logiparam.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Box,
    Dia,
    Exists,
    Forall,
    Forb,
    Iff,
    Impl,
    Not,
    Ob,
    ObC,
    Or,
    Perm,
    PermC,
    Pred,
    Var,
)
from logiparam.logic.generate import FormulaGenerator
from logiparam.logic.normal import (
    desugar,
    eliminate_iff,
    expand_duals,
    fold_constants,
    is_nnf,
    nnf,
    normalize,
)
from logiparam.semantics.evaluate import truth_set

p, q = Atom("p"), Atom("q")


@pytest.mark.logic
def test_expand_duals():
    assert expand_duals(Perm(p)) == Not(Ob(Not(p)))
    assert expand_duals(Forb(p)) == Ob(Not(p))
    assert expand_duals(Dia(p)) == Not(Box(Not(p)))
    assert expand_duals(PermC(q, p)) == Not(ObC(Not(q), p))
    # nested duals are expanded bottom up
    assert expand_duals(Ob(Perm(p))) == Ob(Not(Ob(Not(p))))


@pytest.mark.logic
def test_desugar_only_in_dyadic_logics():
    f = And(Ob(p), Forb(q))
    assert desugar(f, "DDLE") == And(ObC(p, TOP), ObC(Not(q), TOP))
    assert desugar(Perm(p), "DDL_CJ") == PermC(p, TOP)
    assert desugar(f, "KD") == f


@pytest.mark.logic
def test_fold_constants():
    assert fold_constants(And(TOP, p)) == p
    assert fold_constants(Or(p, TOP)) == TOP
    assert fold_constants(Impl(p, BOT)) == Not(p)
    assert fold_constants(Impl(BOT, p)) == TOP
    assert fold_constants(Not(And(BOT, p))) == TOP
    # modal operators are not folded through
    assert fold_constants(Ob(TOP)) == Ob(TOP)


@pytest.mark.logic
def test_normalize():
    assert eliminate_iff(Iff(p, q)) == And(Impl(p, q), Impl(q, p))
    assert normalize(Perm(p), "KD") == Not(Ob(Not(p)))
    assert normalize(Perm(p), "DDLE") == Not(ObC(Not(p), TOP))
    assert normalize(Iff(TOP, p), "KD") == p


@pytest.mark.logic
def test_nnf():
    assert nnf(Not(And(p, q))) == Or(Not(p), Not(q))
    assert nnf(Not(Impl(p, q))) == And(p, Not(q))
    assert nnf(Not(Not(p))) == p
    assert nnf(Not(Ob(Not(Not(p))))) == Not(Ob(p))

    x = Var("x")
    f = Not(Forall("x", Pred("P", (x,))))
    assert nnf(f) == Exists("x", Not(Pred("P", (x,))))

    for f in [Iff(p, Not(q)), Not(Iff(p, q)), Impl(Ob(Impl(p, q)), Not(Or(p, q)))]:
        assert is_nnf(nnf(f))
    assert not is_nnf(Not(And(p, q)))
    assert not is_nnf(Impl(p, q))


def kd_suite(rng, count=12):
    generator = FormulaGenerator("KD", rng, atoms=("p", "q"), max_modal_depth=2)
    fixed = [Perm(p), Forb(Or(p, q)), Not(Perm(Not(q))), Impl(Ob(p), Perm(p)), Ob(Forb(p))]
    return fixed + [generator.formula(3) for _ in range(count)]


def ddle_suite(rng, count=12):
    generator = FormulaGenerator("DDLE", rng, atoms=("p", "q"), max_modal_depth=2)
    fixed = [PermC(q, p), Dia(And(p, q)), Not(PermC(Not(q), Or(p, q))), Forb(p), Perm(Dia(p))]
    return fixed + [generator.formula(3) for _ in range(count)]


def assert_same_truth_sets(models, pairs):
    checked = 0
    for model in models:
        for f, g in pairs:
            assert truth_set(model, f) == truth_set(model, g), f"{f} differs from {g}"
        checked += 1
    assert checked


@pytest.mark.logic
@pytest.mark.parametrize("max_worlds", [2, pytest.param(3, marks=pytest.mark.slow)])
def test_expand_duals_preserves_truth_in_serial_models(rng, kripke_models, max_worlds):
    pairs = [(f, expand_duals(f)) for f in kd_suite(rng)]
    assert_same_truth_sets(kripke_models(max_worlds), pairs)


@pytest.mark.logic
def test_expand_duals_preserves_truth_in_preference_models(rng, ranked_models):
    pairs = [(f, expand_duals(f)) for f in ddle_suite(rng)]
    assert_same_truth_sets(ranked_models(3), pairs)


@pytest.mark.logic
def test_nnf_is_equivalent(rng, kripke_models, ranked_models):
    pairs = [(f, nnf(expand_duals(f))) for f in kd_suite(rng)]
    assert all(is_nnf(g) for _, g in pairs)
    assert_same_truth_sets(kripke_models(2), pairs)

    pairs = [(f, nnf(expand_duals(f))) for f in ddle_suite(rng)]
    assert all(is_nnf(g) for _, g in pairs)
    assert_same_truth_sets(ranked_models(3), pairs)
