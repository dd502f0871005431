"""Normal forms: dual expansion, negation normal form and the monadic-to-dyadic desugaring."""

from logiparam.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    Box,
    Dia,
    Exists,
    Forall,
    Forb,
    Iff,
    Impl,
    LogicId,
    Not,
    Ob,
    ObC,
    Or,
    Perm,
    PermC,
    Pred,
    Top,
)


def _rebuild(f, transform):
    children = f.children()
    if not children:
        return f
    return f.with_children(*(transform(child) for child in children))


def expand_duals(f):
    """Rewrite every dual operator in terms of its primitive.

    ``P(g)`` becomes ``~O(~g)``, ``F(g)`` becomes ``O(~g)``, ``Dia g`` becomes
    ``~Box ~g`` and ``P(g|h)`` becomes ``~O(~g|h)``. Carmo-Jones operators have
    no duals and are left in place.
    """
    f = _rebuild(f, expand_duals)
    if isinstance(f, Perm):
        return Not(Ob(Not(f.arg)))
    if isinstance(f, Forb):
        return Ob(Not(f.arg))
    if isinstance(f, Dia):
        return Not(Box(Not(f.arg)))
    if isinstance(f, PermC):
        return Not(ObC(Not(f.consequent), f.antecedent))
    return f


def desugar(f, logic):
    """Replace monadic deontic operators by their dyadic reading ``O(g|true)``.

    Only applies to the conditional logics; other logics are returned unchanged.
    """
    logic = LogicId.parse(logic)
    if not logic.dyadic:
        return f

    def walk(node):
        node = _rebuild(node, walk)
        if isinstance(node, Ob):
            return ObC(node.arg, TOP)
        if isinstance(node, Perm):
            return PermC(node.arg, TOP)
        if isinstance(node, Forb):
            return ObC(Not(node.arg), TOP)
        return node

    return walk(f)


def eliminate_iff(f):
    f = _rebuild(f, eliminate_iff)
    if isinstance(f, Iff):
        return And(Impl(f.left, f.right), Impl(f.right, f.left))
    return f


def fold_constants(f):
    """Simplify boolean connectives applied to ``true`` and ``false``"""
    f = _rebuild(f, fold_constants)
    if isinstance(f, Not):
        if isinstance(f.arg, Top):
            return BOT
        if isinstance(f.arg, Bot):
            return TOP
    elif isinstance(f, And):
        if isinstance(f.left, Bot) or isinstance(f.right, Bot):
            return BOT
        if isinstance(f.left, Top):
            return f.right
        if isinstance(f.right, Top):
            return f.left
    elif isinstance(f, Or):
        if isinstance(f.left, Top) or isinstance(f.right, Top):
            return TOP
        if isinstance(f.left, Bot):
            return f.right
        if isinstance(f.right, Bot):
            return f.left
    elif isinstance(f, Impl):
        if isinstance(f.left, Bot) or isinstance(f.right, Top):
            return TOP
        if isinstance(f.left, Top):
            return f.right
        if isinstance(f.right, Bot):
            return Not(f.left)
    return f


def normalize(f, logic):
    """Reduce ``f`` to the kernel the encoders understand: desugared, dual-free,
    without ``<->`` and with boolean constants folded."""
    return fold_constants(eliminate_iff(expand_duals(desugar(f, logic))))


def _negate(f):
    """Negation normal form of ``~f``"""
    if isinstance(f, Top):
        return BOT
    if isinstance(f, Bot):
        return TOP
    if isinstance(f, Not):
        return nnf(f.arg)
    if isinstance(f, And):
        return Or(_negate(f.left), _negate(f.right))
    if isinstance(f, Or):
        return And(_negate(f.left), _negate(f.right))
    if isinstance(f, Impl):
        return And(nnf(f.left), _negate(f.right))
    if isinstance(f, Iff):
        return Or(
            And(nnf(f.left), _negate(f.right)), And(_negate(f.left), nnf(f.right))
        )
    if isinstance(f, Forall):
        return Exists(f.var, _negate(f.body))
    if isinstance(f, Exists):
        return Forall(f.var, _negate(f.body))
    # atoms and modal operators park the negation
    return Not(nnf(f))


def nnf(f):
    """Negation normal form.

    ``->`` and ``<->`` are eliminated, negations are pushed through the boolean
    connectives and quantifiers, and stop in front of atoms and modal
    operators whose arguments are normalised in turn. Expects a dual-expanded
    formula, see :func:`expand_duals`.
    """
    if isinstance(f, (Atom, Pred, Top, Bot)):
        return f
    if isinstance(f, Not):
        return _negate(f.arg)
    if isinstance(f, Impl):
        return Or(_negate(f.left), nnf(f.right))
    if isinstance(f, Iff):
        return And(
            Or(_negate(f.left), nnf(f.right)), Or(nnf(f.left), _negate(f.right))
        )
    return _rebuild(f, nnf)


def is_nnf(f):
    if isinstance(f, (Impl, Iff)):
        return False
    if isinstance(f, Not):
        return not isinstance(f.arg, (Not, And, Or, Impl, Iff, Forall, Exists, Top, Bot)) and all(
            is_nnf(child) for child in f.arg.children()
        )
    return all(is_nnf(child) for child in f.children())
