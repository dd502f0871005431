"""
Per-logic signatures and the well-formedness check.

A signature lists the node classes a logic admits. :func:`well_formed` walks a
formula and reports every violation together with the path of the offending
node, a tuple of child indices from the root, so the parser can map it back to
a span of the input.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

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
    Top,
    Var,
)

KEYWORDS = frozenset(
    {"O", "P", "F", "Box", "Dia", "Oa", "Op", "BoxA", "BoxP", "forall", "exists", "true", "false"}
)

BOOLEAN = frozenset({Top, Bot, Not, And, Or, Impl, Iff})
DEONTIC = frozenset({Ob, Perm, Forb})
ALETHIC = frozenset({Box, Dia})
CONDITIONAL = frozenset({ObC, PermC})
CARMO_JONES = frozenset({BoxA, BoxP, ObA, ObP})
FIRST_ORDER = frozenset({Pred, Forall, Exists})


@dataclass(frozen=True)
class Signature:
    logic: LogicId
    nodes: frozenset

    @property
    def quantifiers(self):
        return Forall in self.nodes

    @property
    def operators(self):
        """Sorted names of the node classes admitted beyond the boolean connectives"""
        return sorted(cls.__name__ for cls in self.nodes - BOOLEAN)

    def admits(self, node):
        return type(node) in self.nodes


SIGNATURES = {
    LogicId.FOL: Signature(LogicId.FOL, BOOLEAN | FIRST_ORDER),
    LogicId.KD: Signature(LogicId.KD, BOOLEAN | DEONTIC | {Atom}),
    LogicId.DDLE: Signature(LogicId.DDLE, BOOLEAN | DEONTIC | ALETHIC | CONDITIONAL | {Atom}),
    LogicId.DDL_CJ: Signature(
        LogicId.DDL_CJ, BOOLEAN | DEONTIC | ALETHIC | CONDITIONAL | CARMO_JONES | {Atom}
    ),
}


def signature(logic) -> Signature:
    return SIGNATURES[LogicId.parse(logic)]


def _not_admitted(node, logic):
    kind = type(node)
    if kind in CONDITIONAL:
        return f"dyadic deontic operator is not admitted in {logic}"
    if kind in CARMO_JONES:
        return f"Carmo-Jones operator {kind.__name__} is not admitted in {logic}"
    if kind in ALETHIC:
        return f"alethic modality {kind.__name__} is not admitted in {logic}"
    if kind in DEONTIC:
        return f"deontic operator {kind.__name__} is not admitted in {logic}"
    if kind in (Forall, Exists):
        return f"quantifier is not admitted in {logic}"
    if kind is Pred:
        return f"predicate {node.name} with arguments is not admitted in {logic}"
    if kind is Atom:
        return f"propositional atom {node.name} is not admitted in {logic}, use a nullary predicate"
    return f"{kind.__name__} is not admitted in {logic}"


@dataclass(frozen=True)
class Violation:
    path: Tuple[int, ...]
    message: str
    category: str = "signature-violation"

    @property
    def location(self):
        return ".".join(str(index) for index in self.path) or "root"


@dataclass
class WellFormedReport:
    logic: LogicId
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def well_formed(f, logic) -> WellFormedReport:
    """Check ``f`` against the signature of ``logic``.

    Besides operator membership the check enforces closed formulas, no variable
    shadowing, no reserved names as atoms or predicates and a single arity per
    predicate symbol.
    """

    sig = signature(logic)
    report = WellFormedReport(sig.logic)
    # O, P and F are ordinary predicate names in first-order logic
    reserved = KEYWORDS - {"O", "P", "F"} if sig.logic is LogicId.FOL else KEYWORDS
    arities = {}

    def visit(node, path, bound):
        if not sig.admits(node):
            report.violations.append(Violation(path, _not_admitted(node, sig.logic)))

        if isinstance(node, (Atom, Pred)) and node.name in reserved:
            report.violations.append(
                Violation(path, f"reserved identifier '{node.name}' used as a symbol")
            )

        if isinstance(node, Pred):
            seen = arities.setdefault(node.name, len(node.args))
            if seen != len(node.args):
                report.violations.append(
                    Violation(
                        path,
                        f"predicate {node.name} used with arities {seen} and {len(node.args)}",
                    )
                )
            for arg in node.args:
                if isinstance(arg, Var) and arg.name not in bound:
                    report.violations.append(
                        Violation(path, f"free variable '{arg.name}'", "scope")
                    )

        if isinstance(node, (Forall, Exists)):
            if node.var in bound:
                report.violations.append(
                    Violation(
                        path, f"variable '{node.var}' shadows an enclosing binder", "scope"
                    )
                )
            bound = bound | {node.var}

        for index, child in enumerate(node.children()):
            visit(child, path + (index,), bound)

    visit(f, (), frozenset())
    return report
