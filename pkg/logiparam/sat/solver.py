"""
DPLL with unit propagation over occurrence lists and chronological
backtracking.

The branching order is fixed before search: variables by descending number of
occurrences, ties broken by the lowest index, first trying the polarity that
occurs more often. The same CNF therefore always yields the same verdict and
the same witness.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from logiparam.utils.timer import Deadline, Timer

logger = logging.getLogger(__name__)


class SolveStatus(str, enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    TIMEOUT = "timeout"


@dataclass
class SolveResult:
    status: SolveStatus
    assignment: Optional[Dict[int, bool]] = None
    decisions: int = 0
    conflicts: int = 0
    propagations: int = 0
    elapsed_ms: float = 0.0
    budget: dict = field(default_factory=dict)

    @property
    def sat(self):
        return self.status is SolveStatus.SAT

    @property
    def unsat(self):
        return self.status is SolveStatus.UNSAT

    @property
    def timeout(self):
        return self.status is SolveStatus.TIMEOUT


class _Timeout(Exception):
    pass


class DPLLSolver:
    """One search over one CNF. Instances hold no state shared with other solvers."""

    def __init__(self, cnf, max_decisions=None, deadline=None):
        self.cnf = cnf
        self.max_decisions = max_decisions
        self.deadline = deadline or Deadline(None)
        n = cnf.num_vars

        self.value = [0] * (n + 1)
        self.trail = []
        self.levels = []
        self.qhead = 0
        self.decisions = 0
        self.conflicts = 0
        self.propagations = 0

        self.watch = {}
        counts = [0] * (n + 1)
        polarity = [0] * (n + 1)
        for index, clause in enumerate(cnf.clauses):
            for lit in clause:
                self.watch.setdefault(lit, []).append(index)
                counts[abs(lit)] += 1
                polarity[abs(lit)] += 1 if lit > 0 else -1

        self.order = sorted(range(1, n + 1), key=lambda v: (-counts[v], v))
        self.polarity = polarity

    def lit_value(self, lit):
        value = self.value[abs(lit)]
        return value if lit > 0 else -value

    def assign(self, lit):
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)

    def propagate(self):
        """Run unit propagation to fixpoint. Returns False on conflict."""
        clauses = self.cnf.clauses
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            for index in self.watch.get(-lit, ()):
                unassigned = None
                count = 0
                satisfied = False
                for other in clauses[index]:
                    state = self.lit_value(other)
                    if state > 0:
                        satisfied = True
                        break
                    if state == 0:
                        count += 1
                        unassigned = other
                        if count > 1:
                            break
                if satisfied or count > 1:
                    continue
                if count == 0:
                    return False
                self.propagations += 1
                self.assign(unassigned)
        return True

    def backtrack(self, level_start):
        for lit in self.trail[level_start:]:
            self.value[abs(lit)] = 0
        del self.trail[level_start:]
        self.qhead = min(self.qhead, level_start)

    def pick(self):
        for var in self.order:
            if self.value[var] == 0:
                return var if self.polarity[var] >= 0 else -var
        return None

    def check_budget(self):
        if self.max_decisions is not None and self.decisions > self.max_decisions:
            raise _Timeout()
        if self.deadline.expired():
            raise _Timeout()

    def search(self):
        for clause in self.cnf.clauses:
            if len(clause) == 1:
                state = self.lit_value(clause[0])
                if state < 0:
                    return SolveStatus.UNSAT
                if state == 0:
                    self.assign(clause[0])
        if not self.propagate():
            return SolveStatus.UNSAT

        while True:
            lit = self.pick()
            if lit is None:
                return SolveStatus.SAT

            self.decisions += 1
            self.check_budget()
            self.levels.append([len(self.trail), lit, False])
            self.assign(lit)

            while not self.propagate():
                self.conflicts += 1
                while self.levels and self.levels[-1][2]:
                    start, _, _ = self.levels.pop()
                    self.backtrack(start)
                if not self.levels:
                    return SolveStatus.UNSAT
                level = self.levels[-1]
                self.backtrack(level[0])
                level[2] = True
                self.assign(-level[1])

    def solve(self):
        timer = Timer()
        timer.start()
        try:
            status = self.search()
        except _Timeout:
            status = SolveStatus.TIMEOUT
        timer.stop()

        assignment = None
        if status is SolveStatus.SAT:
            # unconstrained variables default to false
            assignment = {var: self.value[var] > 0 for var in range(1, self.cnf.num_vars + 1)}

        result = SolveResult(
            status=status,
            assignment=assignment,
            decisions=self.decisions,
            conflicts=self.conflicts,
            propagations=self.propagations,
            elapsed_ms=timer.duration(),
            budget={"max_decisions": self.max_decisions, "seconds": self.deadline.seconds},
        )
        logger.debug(
            f"solved {self.cnf.num_vars} vars / {len(self.cnf.clauses)} clauses: {status.value} "
            f"after {self.decisions} decisions, {self.conflicts} conflicts"
        )
        return result


def solve(cnf, max_decisions=None, deadline=None):
    """Decide satisfiability of ``cnf``.

    Args:
        cnf (CNF): clause set to solve
        max_decisions (int, optional): decision budget before giving up
        deadline (Deadline, optional): wall-clock budget

    Returns:
        SolveResult: status SAT with a total assignment, UNSAT, or TIMEOUT with the budget used
    """
    return DPLLSolver(cnf, max_decisions=max_decisions, deadline=deadline).solve()


def verify(cnf, assignment):
    """Independent check that ``assignment`` satisfies every clause of ``cnf``"""
    if assignment is None:
        return False
    for clause in cnf.clauses:
        if not any(assignment.get(abs(lit), False) == (lit > 0) for lit in clause):
            return False
    return True


def brute_force(cnf):
    """Enumerate all assignments in index order; returns the first model or None"""
    variables = range(1, cnf.num_vars + 1)
    for values in itertools.product((False, True), repeat=cnf.num_vars):
        assignment = dict(zip(variables, values))
        if verify(cnf, assignment):
            return assignment
    return None
