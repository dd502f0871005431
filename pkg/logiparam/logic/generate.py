"""Random well-formed formulas, used by the property tests and ``logiparam selfcheck``."""

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

BOOLEAN_KINDS = [Not, And, Or, Impl, Iff]
MODAL_KINDS = {
    LogicId.FOL: [],
    LogicId.KD: [Ob, Perm, Forb],
    LogicId.DDLE: [Ob, Perm, Forb, Box, Dia, ObC, PermC],
    LogicId.DDL_CJ: [Ob, Perm, Forb, Box, Dia, ObC, PermC, BoxA, BoxP, ObA, ObP],
}

DEFAULT_ATOMS = ("p", "q", "r")
DEFAULT_PREDICATES = {"Person": 1, "Agent": 2, "Rain": 0}
DEFAULT_CONSTANTS = ("a", "b", "c")
VARIABLES = ("x", "y", "z")


class FormulaGenerator:
    """Draw random formulas of one logic from a seeded ``random.Random``.

    Args:
        logic (LogicId): logic whose signature the formulas respect
        rng (random.Random): source of randomness, seeded by the caller
        atoms (tuple): propositional atoms for the modal logics
        predicates (dict): predicate name to arity for FOL
        constants (tuple): constant names for FOL
        max_modal (int, optional): cap on the number of modal operators per formula
        max_modal_depth (int, optional): cap on the nesting of modal operators
    """

    def __init__(
        self,
        logic,
        rng,
        atoms=DEFAULT_ATOMS,
        predicates=None,
        constants=DEFAULT_CONSTANTS,
        max_modal=None,
        max_modal_depth=None,
        constants_rate=0.05,
    ):
        self.logic = LogicId.parse(logic)
        self.rng = rng
        self.atoms = tuple(atoms)
        self.predicates = dict(predicates or DEFAULT_PREDICATES)
        self.constants = tuple(constants)
        self.max_modal = max_modal
        self.max_modal_depth = max_modal_depth
        self.constants_rate = constants_rate

    def formula(self, depth=3):
        self._modal_used = 0
        return self._draw(depth, (), 0)

    def theory(self, size, depth=2):
        return [self.formula(depth) for _ in range(size)]

    def _leaf(self, scope):
        if self.rng.random() < self.constants_rate:
            return self.rng.choice([TOP, BOT])
        if self.logic is not LogicId.FOL:
            return Atom(self.rng.choice(self.atoms))

        name = self.rng.choice(sorted(self.predicates))
        terms = [Const(c) for c in self.constants] + [Var(v) for v in scope]
        args = tuple(self.rng.choice(terms) for _ in range(self.predicates[name]))
        return Pred(name, args)

    def _kinds(self, scope, nesting):
        kinds = list(BOOLEAN_KINDS)
        if self.logic is LogicId.FOL:
            if len(scope) < len(VARIABLES):
                kinds += [Forall, Exists]
            return kinds

        budget_left = self.max_modal is None or self._modal_used < self.max_modal
        depth_left = self.max_modal_depth is None or nesting < self.max_modal_depth
        if budget_left and depth_left:
            kinds += MODAL_KINDS[self.logic]
        return kinds

    def _draw(self, depth, scope, nesting):
        if depth <= 0 or self.rng.random() < 0.2:
            return self._leaf(scope)

        kind = self.rng.choice(self._kinds(scope, nesting))

        if kind in (Forall, Exists):
            var = next(v for v in VARIABLES if v not in scope)
            return kind(var, self._draw(depth - 1, scope + (var,), nesting))

        if kind in (And, Or, Impl, Iff):
            return kind(
                self._draw(depth - 1, scope, nesting), self._draw(depth - 1, scope, nesting)
            )

        if kind is Not:
            return Not(self._draw(depth - 1, scope, nesting))

        self._modal_used += 1
        if kind in (ObC, PermC):
            return kind(
                self._draw(depth - 1, scope, nesting + 1),
                self._draw(depth - 1, scope, nesting + 1),
            )
        return kind(self._draw(depth - 1, scope, nesting + 1))


def random_formula(logic, rng, depth=3, **options):
    """Return one random formula of ``logic``, see :class:`FormulaGenerator`"""
    return FormulaGenerator(logic, rng, **options).formula(depth)
