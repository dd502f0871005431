"""
Bounded model existence as propositional satisfiability.

``encode_bounded`` unrolls a theory (and optionally the negation of a goal)
over models with exactly ``k`` worlds, or for FOL over the Herbrand constants
plus ``k - 1`` anonymous elements. Every modal operator becomes an explicit
conjunction or disjunction over worlds. The returned :class:`Decoder` turns a
satisfying assignment back into a model of the logic.

Two consequence relations are supported. Under ``global`` consequence the
theory holds at every world and a refutation needs the goal to fail at some
world. Under ``local`` consequence the theory holds at the designated world 0
and a refutation needs the goal to fail there.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from logiparam.exceptions import EncodingError, LogicMismatchError
from logiparam.logic.formula import (
    And,
    Atom,
    Bot,
    Box,
    BoxA,
    BoxP,
    Impl,
    LogicId,
    Not,
    Ob,
    ObA,
    ObC,
    ObP,
    Or,
    Top,
    atoms,
    constants,
    predicates,
)
from logiparam.logic.normal import normalize
from logiparam.logic.signature import well_formed
from logiparam.sat.cnf import CnfBuilder, propositional_literal
from logiparam.semantics.carmo_jones import CJ_OB_RULES, subsets
from logiparam.semantics.evaluate import evaluate
from logiparam.semantics.models import CJModel, FolInterp, KripkeModel, PreferenceModel

logger = logging.getLogger(__name__)

DEFAULT_MAX_BOUND = {LogicId.FOL: 5, LogicId.KD: 5, LogicId.DDLE: 5, LogicId.DDL_CJ: 3}


class Mode(str, enum.Enum):
    CONSISTENCY = "consistency"
    REFUTATION = "refutation"


class Consequence(str, enum.Enum):
    GLOBAL = "global"
    LOCAL = "local"


@dataclass
class Witness:
    """A decoded model and the world where the goal fails (refutation mode only)"""

    model: object
    world: Optional[int] = None


class _Unrolling:
    """Shared machinery: one literal per (subformula, world) built on a CnfBuilder"""

    logic = None

    def __init__(self, k, formulas):
        self.k = k
        self.worlds = list(range(k))
        self.builder = CnfBuilder()
        self.memo = {}
        self.atom_names = sorted(set().union(*(atoms(f) for f in formulas)) if formulas else set())

    def atom(self, name, w):
        return self.builder.var(("val", name, w))

    def lit(self, f, w):
        key = (f, w)
        if key in self.memo:
            return self.memo[key]

        b = self.builder
        if isinstance(f, Top):
            result = b.true
        elif isinstance(f, Bot):
            result = b.false
        elif isinstance(f, Atom):
            result = self.atom(f.name, w)
        elif isinstance(f, Not):
            result = -self.lit(f.arg, w)
        elif isinstance(f, And):
            result = b.and_([self.lit(f.left, w), self.lit(f.right, w)])
        elif isinstance(f, Or):
            result = b.or_([self.lit(f.left, w), self.lit(f.right, w)])
        elif isinstance(f, Impl):
            result = b.implies(self.lit(f.left, w), self.lit(f.right, w))
        else:
            result = self.modal(f, w)

        self.memo[key] = result
        return result

    def modal(self, f, w):
        raise EncodingError(f"{type(f).__name__} is not supported by the {self.logic} encoder")

    def frame(self):
        """Add the frame conditions of the logic"""

    def holds(self, assignment, lit):
        """Value of ``lit`` under ``assignment``; variables the solver never saw are false"""
        if lit == self.builder.true:
            return True
        if lit == self.builder.false:
            return False
        return assignment.get(abs(lit), False) == (lit > 0)

    def valuation(self, assignment):
        return {
            name: frozenset(w for w in self.worlds if self.holds(assignment, self.atom(name, w)))
            for name in self.atom_names
        }

    def decode_model(self, assignment):
        raise NotImplementedError


class _KripkeUnrolling(_Unrolling):
    logic = LogicId.KD

    def __init__(self, k, formulas, serial=True):
        super().__init__(k, formulas)
        self.serial = serial

    def access(self, w, v):
        return self.builder.var(("access", w, v))

    def frame(self):
        if self.serial:
            for w in self.worlds:
                self.builder.add_clause([self.access(w, v) for v in self.worlds])

    def modal(self, f, w):
        if isinstance(f, Ob):
            b = self.builder
            return b.and_([b.implies(self.access(w, v), self.lit(f.arg, v)) for v in self.worlds])
        return super().modal(f, w)

    def decode_model(self, assignment):
        access = {
            (w, v)
            for w in self.worlds
            for v in self.worlds
            if self.holds(assignment, self.access(w, v))
        }
        return KripkeModel.build(self.k, access, self.valuation(assignment), serial=self.serial)


class _AlethicUnrolling(_Unrolling):
    """Box ranges over all worlds; obligation operators are world-independent"""

    def modal(self, f, w):
        if isinstance(f, Box):
            return self.builder.and_([self.lit(f.arg, v) for v in self.worlds])
        if isinstance(f, ObC):
            if (f, None) not in self.memo:
                self.memo[(f, None)] = self.conditional(f.consequent, f.antecedent)
            return self.memo[(f, None)]
        return self.local(f, w)

    def conditional(self, consequent, antecedent):
        raise NotImplementedError

    def local(self, f, w):
        return super().modal(f, w)


class _PreferenceUnrolling(_AlethicUnrolling):
    logic = LogicId.DDLE

    def better(self, w, v):
        if w == v:
            return self.builder.true
        return self.builder.var(("better", w, v))

    def frame(self):
        b = self.builder
        for w, v in itertools.combinations(self.worlds, 2):
            b.add_clause([self.better(w, v), self.better(v, w)])
        for u, v, w in itertools.permutations(self.worlds, 3):
            b.add_clause([-self.better(u, v), -self.better(v, w), self.better(u, w)])

    def conditional(self, consequent, antecedent):
        b = self.builder
        clauses = []
        for w in self.worlds:
            others = [v for v in self.worlds if v != w]
            is_best = b.and_(
                [b.implies(self.lit(antecedent, v), self.better(w, v)) for v in others]
            )
            clauses.append(b.or_([-self.lit(antecedent, w), -is_best, self.lit(consequent, w)]))
        return b.and_(clauses)

    def decode_model(self, assignment):
        better = {
            (w, v)
            for w in self.worlds
            for v in self.worlds
            if self.holds(assignment, self.better(w, v))
        }
        return PreferenceModel(tuple(self.worlds), better, self.valuation(assignment))


class _CarmoJonesUnrolling(_AlethicUnrolling):
    logic = LogicId.DDL_CJ

    def __init__(self, k, formulas):
        super().__init__(k, formulas)
        self.sets = subsets(self.worlds)

    def av(self, w, v):
        return self.builder.var(("av", w, v))

    def pv(self, w, v):
        return self.builder.var(("pv", w, v))

    def ob(self, context, target):
        return self.builder.var(("ob", context, target))

    def frame(self):
        b = self.builder
        for w in self.worlds:
            b.add_clause([self.av(w, v) for v in self.worlds])
            b.add_clause([self.pv(w, w)])
            for v in self.worlds:
                b.add_clause([-self.av(w, v), self.pv(w, v)])
        for rule in CJ_OB_RULES:
            for body, head in rule.instances(self.worlds):
                clause = [-self.ob(*pair) for pair in body]
                if head is not None:
                    clause.append(self.ob(*head))
                b.add_clause(clause)

    def equals(self, lits, target):
        """Literal for 'the set of worlds whose literal holds is exactly ``target``'"""
        return self.builder.and_(
            [lit if w in target else -lit for w, lit in zip(self.worlds, lits)]
        )

    def membership(self, context_lits, target_lits):
        b = self.builder
        return b.or_(
            [
                b.and_([self.equals(context_lits, x), self.equals(target_lits, y), self.ob(x, y)])
                for x in self.sets
                for y in self.sets
            ]
        )

    def conditional(self, consequent, antecedent):
        return self.membership(
            [self.lit(antecedent, v) for v in self.worlds],
            [self.lit(consequent, v) for v in self.worlds],
        )

    def local(self, f, w):
        b = self.builder
        if isinstance(f, (BoxA, BoxP)):
            versions = self.av if isinstance(f, BoxA) else self.pv
            return b.and_([b.implies(versions(w, v), self.lit(f.arg, v)) for v in self.worlds])
        if isinstance(f, (ObA, ObP)):
            versions = self.av if isinstance(f, ObA) else self.pv
            context = [versions(w, v) for v in self.worlds]
            target = [self.lit(f.arg, v) for v in self.worlds]
            violable = b.or_([b.and_([versions(w, v), -self.lit(f.arg, v)]) for v in self.worlds])
            return b.and_([self.membership(context, target), violable])
        return super().local(f, w)

    def decode_model(self, assignment):
        def row(var):
            return {
                w: frozenset(v for v in self.worlds if self.holds(assignment, var(w, v)))
                for w in self.worlds
            }

        ob = {}
        for x in self.sets:
            members = frozenset(y for y in self.sets if self.holds(assignment, self.ob(x, y)))
            if members:
                ob[x] = members
        return CJModel(
            tuple(self.worlds), row(self.av), row(self.pv), ob, self.valuation(assignment)
        )


class _GroundUnrolling(_Unrolling):
    """First-order formulas grounded over a finite domain of named elements"""

    logic = LogicId.FOL

    def __init__(self, k, formulas):
        super().__init__(1, [])
        names = sorted(set().union(*(constants(f) for f in formulas))) if formulas else []
        if not names:
            names = ["c0"]
        anonymous = []
        index = 1
        while len(anonymous) < k - 1:
            candidate = f"e{index}"
            if candidate not in names:
                anonymous.append(candidate)
            index += 1
        self.domain = tuple(names + anonymous)
        self.arities = {}
        for f in formulas:
            for name, arities in predicates(f).items():
                self.arities[name] = min(arities)
        self.worlds = [0]
        self.k = k

    def ground(self, f, env):
        from logiparam.prover.grounding import ground_formula

        return ground_formula(f, self.domain, env)

    def lit(self, f, w):
        return propositional_literal(
            self.builder, self.ground(f, {}), self.memo, atom_key=lambda name: ("ground", name)
        )

    def decode_model(self, assignment):
        from logiparam.prover.grounding import ground_atom_name

        relations = {}
        for name, arity in self.arities.items():
            rows = set()
            for row in itertools.product(self.domain, repeat=arity):
                var = self.builder.lookup(("ground", ground_atom_name(name, row)))
                if var is not None and assignment.get(var, False):
                    rows.add(row)
            relations[name] = frozenset(rows)
        return FolInterp(self.domain, relations, self.arities)


class Decoder:
    """Maps satisfying assignments of one encoding back to models of its logic"""

    def __init__(self, unrolling, mode, goal, consequence):
        self.unrolling = unrolling
        self.mode = mode
        self.goal = goal
        self.consequence = consequence

    @property
    def logic(self):
        return self.unrolling.logic

    @property
    def k(self):
        return self.unrolling.k

    def decode(self, assignment):
        model = self.unrolling.decode_model(assignment)
        world = None
        if isinstance(model, FolInterp):
            return Witness(model, None)
        if self.mode is Mode.REFUTATION:
            if self.consequence is Consequence.LOCAL:
                world = 0
            else:
                world = next(
                    (w for w in model.worlds if not evaluate(model, w, self.goal)), None
                )
        return Witness(model, world)


def _unrolling(logic, k, formulas, serial):
    if logic is LogicId.KD:
        return _KripkeUnrolling(k, formulas, serial=serial)
    if logic is LogicId.DDLE:
        return _PreferenceUnrolling(k, formulas)
    if logic is LogicId.DDL_CJ:
        return _CarmoJonesUnrolling(k, formulas)
    return _GroundUnrolling(k, formulas)


def encode_bounded(
    logic,
    theory,
    mode=Mode.CONSISTENCY,
    goal=None,
    k=1,
    consequence=Consequence.GLOBAL,
    serial=True,
    max_bound=None,
):
    """Encode bounded model existence for ``theory`` (and the failure of ``goal``).

    Args:
        logic (LogicId): logic of every formula
        theory (list): premises, required to hold (globally or at world 0)
        mode (Mode): ``consistency`` or ``refutation``
        goal (Formula, optional): the goal that must fail in refutation mode
        k (int): number of worlds, or for FOL one plus the number of anonymous elements
        consequence (Consequence): global or local consequence
        serial (bool): impose seriality on KD models; False gives plain K
        max_bound (int, optional): largest admissible ``k``

    Returns:
        tuple: the CNF and its :class:`Decoder`

    Raises:
        EncodingError: if ``k`` is outside ``1..max_bound`` or refutation mode lacks a goal
        LogicMismatchError: if a formula is not well-formed for ``logic``
    """

    logic = LogicId.parse(logic)
    mode = Mode(mode)
    consequence = Consequence(consequence)
    top = max_bound or DEFAULT_MAX_BOUND[logic]
    if k < 1 or k > top:
        raise EncodingError(f"bound {k} outside 1..{top} for {logic}")
    if mode is Mode.REFUTATION and goal is None:
        raise EncodingError("refutation mode needs a goal")

    for f in list(theory) + ([goal] if goal is not None else []):
        report = well_formed(f, logic)
        if not report.ok:
            raise LogicMismatchError(
                f"formula is not well-formed for {logic}", *[v.message for v in report.violations]
            )

    kernel_theory = [normalize(f, logic) for f in theory]
    kernel_goal = normalize(goal, logic) if goal is not None else None
    formulas = kernel_theory + ([kernel_goal] if kernel_goal is not None else [])

    unrolling = _unrolling(logic, k, formulas, serial)
    unrolling.frame()
    b = unrolling.builder

    anchors = unrolling.worlds if consequence is Consequence.GLOBAL else [0]
    for f in kernel_theory:
        for w in anchors:
            b.add_clause([unrolling.lit(f, w)])

    if mode is Mode.REFUTATION:
        b.add_clause([-unrolling.lit(kernel_goal, w) for w in anchors])

    cnf = b.build()
    logger.debug(
        f"encoded {logic} {mode.value} at k={k}: {cnf.num_vars} vars, {len(cnf.clauses)} clauses"
    )
    return cnf, Decoder(unrolling, mode, kernel_goal, consequence)
