"""
Herbrand grounding of function-free first-order formulas.

Quantifiers are expanded over a finite set of constants and every ground atom
``Name(a,b)`` becomes a propositional atom of the same spelling. For sequents
whose Skolem form is universal (no existential in the scope of a universal)
the Herbrand domain is finite, and satisfiability of the grounding coincides
with first-order satisfiability.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from logiparam.exceptions import LogicMismatchError
from logiparam.logic.formula import (
    And,
    Atom,
    Bot,
    Const,
    Exists,
    Forall,
    Iff,
    Impl,
    Not,
    Or,
    Pred,
    Top,
    Var,
    constants,
    conj,
    disj,
    predicates,
    substitute,
)
from logiparam.logic.normal import fold_constants, nnf
from logiparam.sat.cnf import CnfBuilder, propositional_literal
from logiparam.semantics.models import FolInterp

logger = logging.getLogger(__name__)


def ground_atom_name(name, row):
    if not row:
        return name
    return f"{name}({','.join(row)})"


def ground_formula(f, domain, env=None):
    """Expand the quantifiers of ``f`` over ``domain``; ``env`` binds free variables"""
    env = env or {}
    if isinstance(f, Pred):
        row = []
        for arg in f.args:
            if isinstance(arg, Var):
                if arg.name not in env:
                    raise LogicMismatchError(f"free variable '{arg.name}' cannot be grounded")
                row.append(env[arg.name])
            else:
                row.append(arg.name)
        return Atom(ground_atom_name(f.name, row))
    if isinstance(f, Forall):
        return conj(ground_formula(f.body, domain, {**env, f.var: d}) for d in domain)
    if isinstance(f, Exists):
        return disj(ground_formula(f.body, domain, {**env, f.var: d}) for d in domain)
    if isinstance(f, (Top, Bot, Atom)):
        return f
    if isinstance(f, (Not, And, Or, Impl, Iff)):
        return f.with_children(*(ground_formula(child, domain, env) for child in f.children()))
    raise LogicMismatchError(f"{type(f).__name__} is not a first-order connective")


def _fresh(prefix, taken):
    for index in itertools.count():
        name = f"{prefix}{index}"
        if name not in taken:
            taken.add(name)
            return name


def herbrand_constants(formulas):
    """Sorted constants of ``formulas``, or a single fresh constant when there are none"""
    names = set()
    for f in formulas:
        names |= constants(f)
    if not names:
        names.add(_fresh("c", set()))
    return tuple(sorted(names))


def _arities(formulas):
    table = {}
    for f in formulas:
        for name, arities in predicates(f).items():
            table.setdefault(name, min(arities))
    return table


@dataclass
class Grounding:
    """A propositional image of a first-order sequent.

    ``atoms`` maps each ground atom name to its predicate and argument row.
    """

    theory: List[object]
    goal: Optional[object]
    atoms: Dict[str, Tuple[str, Tuple[str, ...]]] = field(default_factory=dict)
    constants: Tuple[str, ...] = ()
    arities: Dict[str, int] = field(default_factory=dict)

    def encode(self, refute=False):
        """Clauses asserting the theory (and the failure of the goal when ``refute``)"""
        builder = CnfBuilder()
        memo = {}
        for f in self.theory:
            builder.add_clause([propositional_literal(builder, f, memo, _ground_key)])
        if refute:
            builder.add_clause([-propositional_literal(builder, self.goal, memo, _ground_key)])
        return builder

    def interpretation(self, builder, assignment):
        relations = {name: set() for name in self.arities}
        for atom_name, (pred, row) in self.atoms.items():
            var = builder.lookup(_ground_key(atom_name))
            if var is not None and assignment.get(var, False):
                relations[pred].add(row)
        return FolInterp(self.constants, relations, self.arities)


def _ground_key(name):
    return ("ground", name)


def ground_fol(theory, goal=None, domain=None):
    """Ground ``theory`` and ``goal`` over ``domain`` (default: their Herbrand constants).

    Returns:
        Grounding: the propositional theory, goal and atom table
    """
    formulas = list(theory) + ([goal] if goal is not None else [])
    domain = tuple(domain) if domain is not None else herbrand_constants(formulas)
    arities = _arities(formulas)

    atoms = {}
    for name, arity in arities.items():
        for row in itertools.product(domain, repeat=arity):
            atoms[ground_atom_name(name, row)] = (name, row)

    grounded = Grounding(
        theory=[fold_constants(ground_formula(f, domain)) for f in theory],
        goal=fold_constants(ground_formula(goal, domain)) if goal is not None else None,
        atoms=atoms,
        constants=domain,
        arities=arities,
    )
    logger.debug(
        f"grounded {len(theory)} formula(s) over {len(domain)} constant(s), {len(atoms)} atoms"
    )
    return grounded


def _exists_under_forall(f, under=False):
    if isinstance(f, Exists) and under:
        return True
    if isinstance(f, Forall):
        under = True
    return any(_exists_under_forall(child, under) for child in f.children())


def in_bernays_schoenfinkel(formulas):
    """True when the negation normal forms of ``formulas`` place no existential
    quantifier inside a universal one."""
    return not any(_exists_under_forall(nnf(f)) for f in formulas)


def skolemize(f, taken):
    """Replace the outermost existentials of the NNF of ``f`` by fresh constants.

    ``taken`` is the set of constant names already in use and is extended with
    the new Skolem constants.
    """

    def walk(node, under):
        if isinstance(node, Exists) and not under:
            name = _fresh("sk", taken)
            return walk(substitute(node.body, node.var, Const(name)), under)
        if isinstance(node, Forall):
            return Forall(node.var, walk(node.body, True))
        children = node.children()
        if not children:
            return node
        return node.with_children(*(walk(child, under) for child in children))

    return walk(nnf(f), False)


def herbrand_sequent(theory, goal=None):
    """Skolemized formulas whose joint unsatisfiability means ``theory`` entails
    ``goal`` (or, without a goal, that the theory is inconsistent)."""
    formulas = list(theory) + ([Not(goal)] if goal is not None else [])
    taken = set()
    for f in formulas:
        taken |= constants(f)
    return [skolemize(f, taken) for f in formulas]
