"""
A labelled tableau deciding validity in KD, optionally under global assumptions.

A node stands for a world and carries a label, the set of NNF formulas that
must hold there. Saturation splits disjunctions into branches. An open branch
gets one successor per negated obligation ``~O(g)`` (carrying ``~g`` and every
``O``-argument of the branch) and, when it has none, a single successor for
seriality. A successor whose label equals the label of an ancestor is linked
back to that ancestor. Labels found unsatisfiable are cached.

Open tableaux are turned into serial Kripke models whose root falsifies the
input formula.
"""

import logging
from dataclasses import dataclass, field
from typing import List

from logiparam.exceptions import BudgetExceeded, LogicMismatchError
from logiparam.logic.formula import And, Atom, Bot, LogicId, Not, Ob, Or, Top
from logiparam.logic.normal import expand_duals, fold_constants, nnf
from logiparam.logic.signature import well_formed
from logiparam.semantics.models import KripkeModel
from logiparam.utils.timer import Deadline

logger = logging.getLogger(__name__)


@dataclass
class TableauValid:
    trace: List[str] = field(default_factory=list)
    nodes: int = 0

    valid = True


@dataclass
class TableauRefuted:
    model: KripkeModel
    world: int = 0

    valid = False


def _complement(f):
    return f.arg if isinstance(f, Not) else Not(f)


def _ordered(formulas):
    return sorted(formulas, key=str)


class _KDTableau:
    def __init__(self, assumptions, deadline):
        self.assumptions = frozenset(assumptions)
        self.deadline = deadline
        self.nodes = []
        self.unsat = set()
        self.trace = []
        self.expanded = 0

    def branches(self, label):
        """Yield the saturated open branches of ``label`` as frozensets of literals,
        obligations and negated obligations."""

        def expand(todo, done):
            if not todo:
                yield done
                return
            f, rest = todo[0], todo[1:]
            if isinstance(f, Top):
                yield from expand(rest, done)
            elif isinstance(f, Bot):
                return
            elif isinstance(f, And):
                yield from expand([f.left, f.right] + rest, done)
            elif isinstance(f, Or):
                if f.left in done or f.right in done:
                    yield from expand(rest, done)
                    return
                for side in (f.left, f.right):
                    yield from expand([side] + rest, done)
            elif _complement(f) in done:
                return
            else:
                yield from expand(rest, done | {f})

        yield from expand(_ordered(label), frozenset())

    def successors(self, branch):
        boxes = {f.arg for f in branch if isinstance(f, Ob)}
        negated = [f.arg for f in branch if isinstance(f, Not)]
        diamonds = _ordered(g.arg for g in negated if isinstance(g, Ob))
        base = frozenset(boxes) | self.assumptions
        if not diamonds:
            return [base]
        return [base | {nnf(Not(g))} for g in diamonds]

    def satisfy(self, label, path):
        """Node id of a world satisfying ``label``, or None when it is unsatisfiable"""
        if label in self.unsat:
            return None
        if self.deadline.expired():
            raise BudgetExceeded(f"KD tableau exceeded its budget after {self.expanded} nodes")
        self.expanded += 1

        node_id = len(self.nodes)
        self.nodes.append(None)
        path = {**path, label: node_id}

        for branch in self.branches(label):
            successors = []
            for child_label in self.successors(branch):
                if child_label in path:
                    successors.append(path[child_label])
                    continue
                child = self.satisfy(child_label, path)
                if child is None:
                    break
                successors.append(child)
            else:
                atoms = {f.name for f in branch if isinstance(f, Atom)}
                self.nodes[node_id] = (atoms, successors)
                return node_id
            del self.nodes[node_id + 1 :]

        del self.nodes[node_id:]
        self.unsat.add(label)
        self.trace.append("closed {" + ", ".join(str(f) for f in _ordered(label)) + "}")
        return None

    def model(self):
        access = {(w, v) for w, (_, successors) in enumerate(self.nodes) for v in successors}
        valuation = {}
        for w, (atoms, _) in enumerate(self.nodes):
            for name in atoms:
                valuation.setdefault(name, set()).add(w)
        return KripkeModel.build(len(self.nodes), access, valuation)


def _prepare(f):
    report = well_formed(f, LogicId.KD)
    if not report.ok:
        raise LogicMismatchError(
            "kd_tableau expects a KD formula", *[v.message for v in report.violations]
        )
    return nnf(fold_constants(expand_duals(f)))


def kd_tableau(f, global_assumptions=(), deadline=None):
    """Decide whether ``f`` holds at every world of every serial Kripke model in
    which every formula of ``global_assumptions`` holds everywhere.

    Args:
        f (Formula): KD formula
        global_assumptions (list): KD formulas assumed at every world
        deadline (Deadline, optional): wall-clock budget

    Returns:
        TableauValid or TableauRefuted: the closed trace, or a countermodel whose
        world 0 falsifies ``f``

    Raises:
        LogicMismatchError: if a formula uses operators outside KD
        BudgetExceeded: if the deadline expires
    """
    deadline = deadline or Deadline(None)
    assumptions = [_prepare(g) for g in global_assumptions]
    negated = nnf(Not(_prepare(f)))

    tableau = _KDTableau(assumptions, deadline)
    root = tableau.satisfy(frozenset([negated, *assumptions]), {})
    logger.debug(f"KD tableau expanded {tableau.expanded} node(s) for {f}")

    if root is None:
        return TableauValid(trace=tableau.trace, nodes=tableau.expanded)
    return TableauRefuted(model=tableau.model(), world=root)
