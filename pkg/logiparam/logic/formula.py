"""
The unified formula AST shared by the four logics.

Formulas are frozen dataclasses, so they are hashable, compare structurally and
can be shared between threads and worker processes. Every node exposes
``children()`` and ``with_children()`` so traversals can be written once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Tuple, Union


class LogicId(str, enum.Enum):
    FOL = "FOL"
    KD = "KD"
    DDLE = "DDLE"
    DDL_CJ = "DDL_CJ"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, value):
        """Convert ``value`` (case-insensitive name) into a LogicId.

        Raises:
            ValueError: if the name is not one of FOL, KD, DDLE, DDL_CJ
        """
        if isinstance(value, cls):
            return value
        lookup = {logic.value.upper(): logic for logic in cls}
        key = str(value).strip().upper().replace("-", "_")
        if key not in lookup:
            raise ValueError(
                f"Unknown logic '{value}', choose from {', '.join(lookup)}"
            )
        return lookup[key]

    @property
    def dyadic(self):
        """True for the conditional logics with preference or Carmo-Jones semantics"""
        return self in (LogicId.DDLE, LogicId.DDL_CJ)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Union[Var, Const]


class Formula:
    """Base class of every formula node"""

    __slots__ = ()

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def with_children(self, *children):
        return self

    def __str__(self):
        from logiparam.logic.printer import pretty

        return pretty(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Pred(Formula):
    name: str
    args: Tuple[Term, ...] = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class _Unary(Formula):
    arg: Formula

    def children(self):
        return (self.arg,)

    def with_children(self, arg):
        return type(self)(arg)


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)

    def with_children(self, left, right):
        return type(self)(left, right)


@dataclass(frozen=True)
class _Quantifier(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)

    def with_children(self, body):
        return type(self)(self.var, body)


@dataclass(frozen=True)
class _Dyadic(Formula):
    consequent: Formula
    antecedent: Formula

    def children(self):
        return (self.consequent, self.antecedent)

    def with_children(self, consequent, antecedent):
        return type(self)(consequent, antecedent)


class Not(_Unary):
    pass


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Impl(_Binary):
    pass


class Iff(_Binary):
    pass


class Forall(_Quantifier):
    pass


class Exists(_Quantifier):
    pass


class Ob(_Unary):
    """monadic obligation"""


class Perm(_Unary):
    """monadic permission, the dual of Ob"""


class Forb(_Unary):
    """prohibition"""


class Box(_Unary):
    """truth in all worlds"""


class Dia(_Unary):
    pass


class ObC(_Dyadic):
    """conditional obligation O(consequent | antecedent)"""


class PermC(_Dyadic):
    """conditional permission P(consequent | antecedent)"""


class BoxA(_Unary):
    """truth in all actual versions of the current world"""


class BoxP(_Unary):
    """truth in all potential versions of the current world"""


class ObA(_Unary):
    """actual obligation"""


class ObP(_Unary):
    """primary obligation"""


TOP = Top()
BOT = Bot()

UNARY_MODALS = (Ob, Perm, Forb, Box, Dia, BoxA, BoxP, ObA, ObP)
BINARY_CONNECTIVES = (And, Or, Impl, Iff)
QUANTIFIERS = (Forall, Exists)
DYADIC = (ObC, PermC)


def conj(items) -> Formula:
    """Left-nested conjunction of ``items``, Top when empty"""
    items = list(items)
    if not items:
        return TOP
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


def disj(items) -> Formula:
    """Left-nested disjunction of ``items``, Bot when empty"""
    items = list(items)
    if not items:
        return BOT
    result = items[0]
    for item in items[1:]:
        result = Or(result, item)
    return result


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal of ``f`` including ``f`` itself"""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def atoms(f: Formula) -> set:
    """Names of every Atom and Pred occurring in ``f``"""
    return {node.name for node in subformulas(f) if isinstance(node, (Atom, Pred))}


def predicates(f: Formula) -> dict:
    """Map predicate name to the set of arities it is used with"""
    table = {}
    for node in subformulas(f):
        if isinstance(node, Pred):
            table.setdefault(node.name, set()).add(len(node.args))
    return table


def constants(f: Formula) -> set:
    return {
        arg.name
        for node in subformulas(f)
        if isinstance(node, Pred)
        for arg in node.args
        if isinstance(arg, Const)
    }


def free_vars(f: Formula, bound=frozenset()) -> set:
    if isinstance(f, Pred):
        return {a.name for a in f.args if isinstance(a, Var) and a.name not in bound}
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body, bound | {f.var})
    result = set()
    for child in f.children():
        result |= free_vars(child, bound)
    return result


def modal_depth(f: Formula) -> int:
    inner = max((modal_depth(child) for child in f.children()), default=0)
    if isinstance(f, UNARY_MODALS + DYADIC):
        return inner + 1
    return inner


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


def substitute(f: Formula, var: str, term: Term) -> Formula:
    """Replace free occurrences of variable ``var`` by ``term``"""
    if isinstance(f, Pred):
        args = tuple(
            term if isinstance(a, Var) and a.name == var else a for a in f.args
        )
        return Pred(f.name, args)
    if isinstance(f, QUANTIFIERS) and f.var == var:
        return f
    children = f.children()
    if not children:
        return f
    return f.with_children(*(substitute(child, var, term) for child in children))
