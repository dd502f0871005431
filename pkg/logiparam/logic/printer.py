"""
Canonical rendering of formulas in the surface syntax.

``pretty`` is the inverse of :func:`logiparam.logic.parser.parse_formula`: the
output uses the minimum parentheses required by the precedence table below,
so parsing it back yields a structurally equal formula.
"""

from logiparam.logic.formula import (
    And,
    Atom,
    Bot,
    Box,
    BoxA,
    BoxP,
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
)

QUANTIFIER, IFF, IMPL, OR, AND, UNARY, ATOMIC = range(7)

BINARY = {Iff: (" <-> ", IFF), Impl: (" -> ", IMPL), Or: (" | ", OR), And: (" & ", AND)}
PREFIX = {Not: "~", Box: "Box ", Dia: "Dia ", BoxA: "BoxA ", BoxP: "BoxP ", ObA: "Oa ", ObP: "Op "}
CALL = {Ob: "O", Perm: "P", Forb: "F"}
CONDITIONAL = {ObC: "O", PermC: "P"}


def precedence(f):
    if isinstance(f, (Forall, Exists)):
        return QUANTIFIER
    for cls, (_, level) in BINARY.items():
        if isinstance(f, cls):
            return level
    if isinstance(f, tuple(PREFIX)):
        return UNARY
    return ATOMIC


def _wrap(f, parenthesize):
    text = pretty(f)
    return f"({text})" if parenthesize else text


def _call_argument(f):
    # a top-level '|' inside O( ... ) would read as the conditional separator
    return _wrap(f, precedence(f) <= OR)


def pretty(f) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bot):
        return "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Pred):
        if not f.args:
            return f.name
        return f"{f.name}({', '.join(str(arg) for arg in f.args)})"

    if isinstance(f, (Forall, Exists)):
        keyword = "forall" if isinstance(f, Forall) else "exists"
        return f"{keyword} {f.var}. {pretty(f.body)}"

    for cls, symbol in PREFIX.items():
        if isinstance(f, cls):
            return symbol + _wrap(f.arg, precedence(f.arg) < UNARY)

    for cls, name in CALL.items():
        if isinstance(f, cls):
            argument = pretty(f.arg) if cls is Forb else _call_argument(f.arg)
            return f"{name}({argument})"

    for cls, name in CONDITIONAL.items():
        if isinstance(f, cls):
            return f"{name}({_call_argument(f.consequent)}|{pretty(f.antecedent)})"

    symbol, level = BINARY[type(f)]
    if isinstance(f, Impl):
        left = _wrap(f.left, precedence(f.left) <= level)
        right = _wrap(f.right, precedence(f.right) < level)
    else:
        left = _wrap(f.left, precedence(f.left) < level)
        right = _wrap(f.right, precedence(f.right) <= level)
    return left + symbol + right
