"""
Parser for the surface formula syntax, built on a `lark <https://lark-parser.readthedocs.io>`_
LALR grammar.

Precedence from loosest to tightest binding::

    forall x. / exists x.     body extends as far as possible
    <->                       left associative
    ->                        right associative
    |                         left associative
    &                         left associative
    ~  Box  Dia  BoxA  BoxP  Oa  Op
    atoms, Pred(t, ...), O(g), O(g|h), P(g), P(g|h), F(g), true, false, ( ... )

A quantifier nested inside a connective must be parenthesised. Inside ``O(``
and ``P(`` a top-level ``|`` separates consequent and antecedent, so a
disjunctive consequent must be parenthesised too. An identifier used as a
predicate argument is a variable when an enclosing quantifier binds it and a
constant otherwise. The FOL grammar has no deontic operators, so ``O``, ``P``
and ``F`` are ordinary predicate names there.

All spans reported by :class:`~logiparam.exceptions.ParseError` are byte offsets
into the UTF-8 encoding of the input.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Tuple

from lark import Lark
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedToken
from lark.lexer import PatternStr
from lark.visitors import Interpreter

from logiparam.exceptions import ParseError
from logiparam.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
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
    LogicId,
    Not,
    Ob,
    ObA,
    ObC,
    ObP,
    Or,
    Perm,
    PermC,
    Pred,
    Var,
)
from logiparam.logic.signature import well_formed
from logiparam.utils.file import read_file

PREFIX_OPERATORS = {
    "~": Not,
    "Box": Box,
    "Dia": Dia,
    "BoxA": BoxA,
    "BoxP": BoxP,
    "Oa": ObA,
    "Op": ObP,
}

# rules left uninlined by the grammar that build binary connectives
BINARY_RULES = {
    "iff": Iff,
    "impl": Impl,
    "disj": Or,
    "conj": And,
    "consequent": Iff,
    "consequent_impl": Impl,
    "consequent_conj": And,
}

_GRAMMAR = r"""
?start: formula

?formula: iff
        | forall
        | exists
forall: "forall" NAME "." formula
exists: "exists" NAME "." formula

?iff: impl
    | iff "<->" impl
?impl: disj
     | disj "->" impl
?disj: conj
     | disj "|" conj
?conj: unary
     | conj "&" unary

?unary: prefix
      | primary
prefix: prefix_op unary
!prefix_op: "~" | "Box" | "Dia" | "BoxA" | "BoxP" | "Oa" | "Op"

?primary: "(" formula ")"
        | constant
        | predicate
        | atom
        %(deontic_alternatives)s
!constant: "true" | "false"
predicate: NAME "(" terms ")"
terms: NAME ("," NAME)*
atom: NAME
%(deontic_rules)s
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%%import common.WS
%%ignore WS
"""

# the consequent of O( ... ) and P( ... ) may not contain a top-level '|'
_DEONTIC_RULES = r"""
ob: "O" "(" consequent ")"
perm: "P" "(" consequent ")"
obc: "O" "(" consequent "|" formula ")"
permc: "P" "(" consequent "|" formula ")"
forb: "F" "(" formula ")"

?consequent: consequent_impl
           | consequent "<->" consequent_impl
?consequent_impl: consequent_conj
                | consequent_conj "->" consequent_impl
?consequent_conj: unary
                | consequent_conj "&" unary
"""


@lru_cache(maxsize=None)
def formula_parser(modal=True):
    """Return the cached lark parser, with deontic operators when ``modal`` is set"""
    grammar = _GRAMMAR % {
        "deontic_alternatives": "| ob | perm | obc | permc | forb" if modal else "",
        "deontic_rules": _DEONTIC_RULES if modal else "",
    }
    return Lark(grammar, parser="lalr", lexer="basic", propagate_positions=True)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


class Located(NamedTuple):
    """Character span of a parsed node, mirroring the shape of the formula"""

    span: Tuple[int, int]
    children: tuple = ()


class _ByteOffsets:
    def __init__(self, text):
        self.offsets = [0]
        for char in text:
            self.offsets.append(self.offsets[-1] + len(char.encode("utf-8")))

    def __call__(self, index):
        return self.offsets[min(index, len(self.offsets) - 1)]


def tokenize(text, modal=True):
    """Split ``text`` into tokens with the grammar's lexer. Identifiers and
    keywords are ``ident`` tokens, punctuation and connectives ``symbol`` tokens.

    Raises:
        ParseError: lexical error on a character no token starts with
    """
    try:
        tokens = [
            Token(
                "ident" if tok.value.isidentifier() else "symbol",
                tok.value,
                tok.start_pos,
                tok.end_pos,
            )
            for tok in formula_parser(modal).lex(text)
        ]
    except UnexpectedCharacters as err:
        raise _lexical_error(text, err)
    tokens.append(Token("eof", "", len(text), len(text)))
    return tokens


def _prefix_end(text, position):
    return len(text[:position].rstrip())


def _lexical_error(text, err):
    to_bytes = _ByteOffsets(text)
    position = err.pos_in_stream
    char = text[position]
    if char == "-":
        message = "expected '->' after '-'"
    elif char == "<":
        message = "expected '<->' after '<'"
    else:
        message = f"unexpected character {char!r}"
    return ParseError(
        message,
        span=(to_bytes(position), to_bytes(position + 1)),
        category="lexical",
        prefix_end=to_bytes(_prefix_end(text, position)),
    )


def _describe_terminal(parser, name):
    if name == "$END":
        return "end of input"
    if name == "NAME":
        return "an identifier"
    pattern = parser.get_terminal(name).pattern
    return f"'{pattern.value}'" if isinstance(pattern, PatternStr) else name


def _grammar_error(text, parser, err):
    to_bytes = _ByteOffsets(text)
    token = getattr(err, "token", None)
    if isinstance(err, UnexpectedEOF) or token is None or token.type == "$END":
        start = end = len(text)
        found = "end of input"
    else:
        start, end = token.start_pos, token.end_pos
        found = f"'{token.value}'"

    message = f"unexpected {found}"
    expected = sorted(_describe_terminal(parser, name) for name in err.expected)
    if expected and len(expected) <= 3:
        message += f", expected {' or '.join(expected)}"
    return ParseError(
        message,
        span=(to_bytes(start), to_bytes(end)),
        category="grammar",
        prefix_end=to_bytes(_prefix_end(text, start)),
    )


class FormulaBuilder(Interpreter):
    """Top-down walk over the lark tree building :mod:`logiparam.logic.formula`
    nodes and their :class:`Located` spans. Quantifier scopes decide whether a
    term is a variable or a constant."""

    def __init__(self, text, logic):
        self.text = text
        self.logic = logic
        self.to_bytes = _ByteOffsets(text)
        self.scope = []

    def scope_error(self, message, token):
        start, end = self.to_bytes(token.start_pos), self.to_bytes(token.end_pos)
        return ParseError(message, span=(start, end), category="scope", prefix_end=start)

    @staticmethod
    def located(tree, *children):
        return Located((tree.meta.start_pos, tree.meta.end_pos), children)

    def __default__(self, tree):
        cls = BINARY_RULES[tree.data]
        left, lloc = self.visit(tree.children[0])
        right, rloc = self.visit(tree.children[1])
        return cls(left, right), self.located(tree, lloc, rloc)

    def _quantifier(self, tree, cls):
        var, body = tree.children
        if var.value in self.scope:
            raise self.scope_error(f"variable '{var.value}' shadows an enclosing binder", var)
        self.scope.append(var.value)
        node, bloc = self.visit(body)
        self.scope.pop()
        return cls(var.value, node), self.located(tree, bloc)

    def forall(self, tree):
        return self._quantifier(tree, Forall)

    def exists(self, tree):
        return self._quantifier(tree, Exists)

    def prefix(self, tree):
        op, body = tree.children
        arg, aloc = self.visit(body)
        return PREFIX_OPERATORS[op.children[0].value](arg), self.located(tree, aloc)

    def constant(self, tree):
        node = TOP if tree.children[0].value == "true" else BOT
        return node, self.located(tree)

    def atom(self, tree):
        (name,) = tree.children
        if name.value in self.scope:
            raise self.scope_error(f"variable '{name.value}' used as a formula", name)
        if self.logic is LogicId.FOL:
            return Pred(name.value, ()), self.located(tree)
        return Atom(name.value), self.located(tree)

    def predicate(self, tree):
        name, terms = tree.children
        args = tuple(
            Var(term.value) if term.value in self.scope else Const(term.value)
            for term in terms.children
        )
        return Pred(name.value, args), self.located(tree)

    def _monadic(self, tree, cls):
        arg, aloc = self.visit(tree.children[0])
        return cls(arg), self.located(tree, aloc)

    def _dyadic(self, tree, cls):
        consequent, cloc = self.visit(tree.children[0])
        antecedent, aloc = self.visit(tree.children[1])
        return cls(consequent, antecedent), self.located(tree, cloc, aloc)

    def ob(self, tree):
        return self._monadic(tree, Ob)

    def perm(self, tree):
        return self._monadic(tree, Perm)

    def forb(self, tree):
        return self._monadic(tree, Forb)

    def obc(self, tree):
        return self._dyadic(tree, ObC)

    def permc(self, tree):
        return self._dyadic(tree, PermC)


def _locate(loc, path):
    for index in path:
        if index >= len(loc.children):
            break
        loc = loc.children[index]
    return loc.span


def parse_formula(text, logic):
    """Parse ``text`` as a formula of ``logic``.

    Args:
        text (str): formula in the surface syntax
        logic (LogicId or str): logic whose signature the formula must respect

    Returns:
        Formula: the parsed formula, well-formed for ``logic``

    Raises:
        ParseError: with category lexical, grammar, signature-violation or scope
    """

    logic = LogicId.parse(logic)
    to_bytes = _ByteOffsets(text)
    if not text.strip():
        raise ParseError("empty formula", span=(0, to_bytes(len(text))), category="grammar")

    parser = formula_parser(modal=logic is not LogicId.FOL)
    try:
        tree = parser.parse(text)
    except UnexpectedCharacters as err:
        raise _lexical_error(text, err)
    except (UnexpectedToken, UnexpectedEOF) as err:
        raise _grammar_error(text, parser, err)

    node, loc = FormulaBuilder(text, logic).visit(tree)

    report = well_formed(node, logic)
    if not report.ok:
        violation = report.violations[0]
        start, end = _locate(loc, violation.path)
        start, end = to_bytes(start), to_bytes(end)
        raise ParseError(
            violation.message, span=(start, end), category=violation.category, prefix_end=start
        )
    return node


def parse_formula_lines(text, logic):
    """Parse one formula per non-empty line, skipping ``#`` comments.

    Raises:
        ParseError: located at ``line <n>`` of ``text``
    """
    formulas = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        if not content.strip():
            continue
        try:
            formulas.append(parse_formula(content, logic))
        except ParseError as err:
            raise err.with_field(f"line {number}")
    return formulas


def parse_formula_file(path, logic):
    """Read a formula file, one formula per line, see :func:`parse_formula_lines`"""
    return parse_formula_lines(read_file(path), logic)
