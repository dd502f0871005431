"""
Evaluators for Kripke, preference and Carmo-Jones models and for first-order
interpretations.

Modal evaluation computes truth sets: ``truth_set(model, f)`` is the frozenset
of worlds where ``f`` holds. Dual and monadic operators are read through their
definitions, so formulas need not be normalised first.
"""

import itertools

from logiparam.exceptions import EvaluationError, LogicMismatchError
from logiparam.logic.formula import (
    And,
    Atom,
    Bot,
    Box,
    BoxA,
    BoxP,
    Const,
    Dia,
    Exists,
    Forall,
    Forb,
    Iff,
    Impl,
    Not,
    Ob,
    ObA,
    ObC,
    ObP,
    Or,
    Perm,
    PermC,
    Pred,
    Top,
    Var,
)
from logiparam.semantics.models import CJModel, FolInterp, KripkeModel, PreferenceModel


class _TruthSets:
    def __init__(self, model):
        self.model = model
        self.all = frozenset(model.worlds)
        self.cache = {}

    def __call__(self, f):
        if f not in self.cache:
            self.cache[f] = self.compute(f)
        return self.cache[f]

    def mismatch(self, f):
        raise LogicMismatchError(
            f"{type(f).__name__} cannot be evaluated in a {type(self.model).__name__}"
        )

    def compute(self, f):
        W = self.all
        if isinstance(f, Top):
            return W
        if isinstance(f, Bot):
            return frozenset()
        if isinstance(f, Atom):
            return self.model.valuation.get(f.name, frozenset())
        if isinstance(f, Not):
            return W - self(f.arg)
        if isinstance(f, And):
            return self(f.left) & self(f.right)
        if isinstance(f, Or):
            return self(f.left) | self(f.right)
        if isinstance(f, Impl):
            return (W - self(f.left)) | self(f.right)
        if isinstance(f, Iff):
            left, right = self(f.left), self(f.right)
            return (left & right) | (W - left - right)
        return self.modal(f)

    def modal(self, f):
        self.mismatch(f)


class _KripkeTruthSets(_TruthSets):
    def modal(self, f):
        model = self.model
        if isinstance(f, Ob):
            target = self(f.arg)
            return frozenset(w for w in model.worlds if model.successors(w) <= target)
        if isinstance(f, Perm):
            target = self(f.arg)
            return frozenset(w for w in model.worlds if model.successors(w) & target)
        if isinstance(f, Forb):
            target = self(f.arg)
            return frozenset(w for w in model.worlds if not model.successors(w) & target)
        self.mismatch(f)


class _AlethicTruthSets(_TruthSets):
    """Box and Dia range over every world; conditional obligations are world-independent"""

    def everywhere(self, holds):
        return self.all if holds else frozenset()

    def obligatory(self, consequent, antecedent):
        raise NotImplementedError

    def modal(self, f):
        if isinstance(f, Box):
            return self.everywhere(self(f.arg) == self.all)
        if isinstance(f, Dia):
            return self.everywhere(bool(self(f.arg)))
        if isinstance(f, ObC):
            return self.everywhere(self.obligatory(self(f.consequent), self(f.antecedent)))
        if isinstance(f, PermC):
            negated = self.all - self(f.consequent)
            return self.everywhere(not self.obligatory(negated, self(f.antecedent)))
        if isinstance(f, Ob):
            return self.everywhere(self.obligatory(self(f.arg), self.all))
        if isinstance(f, Perm):
            return self.everywhere(not self.obligatory(self.all - self(f.arg), self.all))
        if isinstance(f, Forb):
            return self.everywhere(self.obligatory(self.all - self(f.arg), self.all))
        return self.local(f)

    def local(self, f):
        self.mismatch(f)


class _PreferenceTruthSets(_AlethicTruthSets):
    def obligatory(self, consequent, antecedent):
        # best of an empty antecedent is empty, so the obligation holds vacuously
        return self.model.best(antecedent) <= consequent


class _CarmoJonesTruthSets(_AlethicTruthSets):
    def obligatory(self, consequent, antecedent):
        return self.model.obligatory(antecedent, consequent)

    def local(self, f):
        model = self.model
        if isinstance(f, (BoxA, BoxP)):
            versions = model.av if isinstance(f, BoxA) else model.pv
            target = self(f.arg)
            return frozenset(w for w in model.worlds if versions.get(w, frozenset()) <= target)
        if isinstance(f, (ObA, ObP)):
            versions = model.av if isinstance(f, ObA) else model.pv
            target = self(f.arg)
            return frozenset(
                w
                for w in model.worlds
                if model.obligatory(versions.get(w, frozenset()), target)
                and versions.get(w, frozenset()) - target
            )
        self.mismatch(f)


_EVALUATORS = {
    KripkeModel: _KripkeTruthSets,
    PreferenceModel: _PreferenceTruthSets,
    CJModel: _CarmoJonesTruthSets,
}


def truth_set(model, f):
    """Worlds of ``model`` where ``f`` holds.

    Raises:
        LogicMismatchError: if ``f`` uses an operator the model's logic does not interpret
    """
    if isinstance(model, FolInterp):
        raise LogicMismatchError("first-order interpretations have no worlds, use eval_fol")
    return _EVALUATORS[type(model)](model)(f)


def evaluate(model, world, f):
    """Truth of ``f`` at ``world``; for a FolInterp the world is ignored"""
    if isinstance(model, FolInterp):
        return eval_fol(model, f, {})
    if world not in model.worlds:
        raise EvaluationError(f"world {world} is not in the model")
    return world in truth_set(model, f)


def globally_valid(model, f):
    if isinstance(model, FolInterp):
        return eval_fol(model, f, {})
    return truth_set(model, f) == frozenset(model.worlds)


def _denote(interp, term, env):
    if isinstance(term, Var):
        if term.name not in env:
            raise EvaluationError(f"unbound variable '{term.name}'")
        return env[term.name]
    if isinstance(term, Const):
        if term.name not in interp.domain:
            raise EvaluationError(f"constant '{term.name}' is not in the domain")
        return term.name
    raise EvaluationError(f"unsupported term {term!r}")


def eval_fol(interp, f, env=None):
    """Tarskian satisfaction of ``f`` in ``interp`` under the variable assignment ``env``.

    Constants denote the domain element of the same name.

    Raises:
        EvaluationError: on an unbound variable, an unknown constant or an unknown predicate
        LogicMismatchError: if ``f`` contains a modal operator
    """
    env = env or {}
    if isinstance(f, Pred):
        if f.name not in interp.relations:
            raise EvaluationError(f"unknown predicate '{f.name}'")
        row = tuple(_denote(interp, arg, env) for arg in f.args)
        return row in interp.relations[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not eval_fol(interp, f.arg, env)
    if isinstance(f, And):
        return eval_fol(interp, f.left, env) and eval_fol(interp, f.right, env)
    if isinstance(f, Or):
        return eval_fol(interp, f.left, env) or eval_fol(interp, f.right, env)
    if isinstance(f, Impl):
        return not eval_fol(interp, f.left, env) or eval_fol(interp, f.right, env)
    if isinstance(f, Iff):
        return eval_fol(interp, f.left, env) == eval_fol(interp, f.right, env)
    if isinstance(f, Forall):
        return all(eval_fol(interp, f.body, {**env, f.var: d}) for d in interp.domain)
    if isinstance(f, Exists):
        return any(eval_fol(interp, f.body, {**env, f.var: d}) for d in interp.domain)
    raise LogicMismatchError(
        f"{type(f).__name__} cannot be evaluated in a first-order interpretation"
    )


def all_interpretations(domain, arities):
    """Every interpretation of the predicates in ``arities`` over ``domain``"""
    names = sorted(arities)
    rows = {name: list(itertools.product(domain, repeat=arities[name])) for name in names}
    choices = [itertools.product((False, True), repeat=len(rows[name])) for name in names]
    for picks in itertools.product(*[list(c) for c in choices]):
        relations = {
            name: frozenset(row for row, keep in zip(rows[name], pick) if keep)
            for name, pick in zip(names, picks)
        }
        yield FolInterp(tuple(domain), relations, dict(arities))
