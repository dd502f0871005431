"""
Clause sets and the gate builder shared by the Tseitin transformation and the
bounded model encoders.

Variable 1 of every :class:`CnfBuilder` is the constant ``true`` (fixed by a
unit clause), so ``builder.true`` and ``builder.false`` are ordinary literals
and gates fold them away where possible.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from logiparam.exceptions import EncodingError
from logiparam.logic.formula import And, Atom, Bot, Iff, Impl, Not, Or, Top


@dataclass
class CNF:
    num_vars: int
    clauses: List[Tuple[int, ...]] = field(default_factory=list)
    names: Dict[int, object] = field(default_factory=dict)

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")
            if any(-lit in clause for lit in clause):
                raise ValueError(f"clause {clause} contains a complementary pair")

    @classmethod
    def from_lists(cls, clauses, num_vars=None):
        clauses = [tuple(clause) for clause in clauses]
        if num_vars is None:
            num_vars = max((abs(lit) for clause in clauses for lit in clause), default=0)
        return cls(num_vars, clauses)

    def __len__(self):
        return len(self.clauses)


class CnfBuilder:
    def __init__(self):
        self.num_vars = 0
        self.clauses = []
        self.names = {}
        self._keys = {}
        self._gates = {}
        self.true = self.new_var("true")
        self.false = -self.true
        self.clauses.append((self.true,))

    def new_var(self, name=None):
        self.num_vars += 1
        if name is not None:
            self.names[self.num_vars] = name
        return self.num_vars

    def var(self, key):
        """Return the variable registered for ``key``, creating it on first use"""
        if key not in self._keys:
            self._keys[key] = self.new_var(key)
        return self._keys[key]

    def lookup(self, key):
        return self._keys.get(key)

    def add_clause(self, lits):
        """Add a clause, dropping tautologies and false literals.

        An empty clause makes the builder unsatisfiable.
        """
        clause = []
        for lit in lits:
            if lit == self.true or -lit in clause:
                return
            if lit == self.false or lit in clause:
                continue
            clause.append(lit)
        if not clause:
            clause = [self.false]
        self.clauses.append(tuple(clause))

    def and_(self, lits):
        unique = []
        for lit in lits:
            if lit == self.false or -lit in unique:
                return self.false
            if lit == self.true or lit in unique:
                continue
            unique.append(lit)
        if not unique:
            return self.true
        if len(unique) == 1:
            return unique[0]

        key = ("and", frozenset(unique))
        if key in self._gates:
            return self._gates[key]

        gate = self.new_var()
        for lit in unique:
            self.clauses.append((-gate, lit))
        self.clauses.append(tuple([gate] + [-lit for lit in unique]))
        self._gates[key] = gate
        return gate

    def or_(self, lits):
        return -self.and_([-lit for lit in lits])

    def implies(self, a, b):
        return self.or_([-a, b])

    def iff(self, a, b):
        return self.and_([self.implies(a, b), self.implies(b, a)])

    def build(self):
        return CNF(self.num_vars, list(self.clauses), dict(self.names))


def propositional_literal(builder, f, memo, atom_key=lambda name: ("atom", name)):
    """Literal equivalent to the propositional formula ``f`` under ``builder``

    Raises:
        EncodingError: if ``f`` contains a modal operator, quantifier or predicate
    """
    if f in memo:
        return memo[f]

    if isinstance(f, Atom):
        lit = builder.var(atom_key(f.name))
    elif isinstance(f, Top):
        lit = builder.true
    elif isinstance(f, Bot):
        lit = builder.false
    elif isinstance(f, Not):
        lit = -propositional_literal(builder, f.arg, memo, atom_key)
    elif isinstance(f, (And, Or, Impl, Iff)):
        left = propositional_literal(builder, f.left, memo, atom_key)
        right = propositional_literal(builder, f.right, memo, atom_key)
        if isinstance(f, And):
            lit = builder.and_([left, right])
        elif isinstance(f, Or):
            lit = builder.or_([left, right])
        elif isinstance(f, Impl):
            lit = builder.implies(left, right)
        else:
            lit = builder.iff(left, right)
    else:
        raise EncodingError(f"{type(f).__name__} is not a propositional connective")

    memo[f] = lit
    return lit


def tseitin(f):
    """Equisatisfiable CNF of a propositional formula.

    Returns:
        tuple: the :class:`CNF` and a map from each subformula to its literal
    """
    builder = CnfBuilder()
    memo = {}
    builder.add_clause([propositional_literal(builder, f, memo)])
    return builder.build(), memo
