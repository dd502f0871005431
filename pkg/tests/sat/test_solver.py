import pytest

from logiparam.cli.selfcheck import random_cnf
from logiparam.exceptions import EncodingError
from logiparam.logic.formula import And, Atom, Iff, Impl, Not, Ob, Or
from logiparam.sat.cnf import CNF, CnfBuilder, tseitin
from logiparam.sat.solver import SolveStatus, brute_force, solve, verify
from logiparam.utils.timer import Deadline

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.sat
def test_cnf_validation():
    cnf = CNF.from_lists([[1, -2], [2, 3]])
    assert cnf.num_vars == 3
    assert len(cnf) == 2

    with pytest.raises(ValueError):
        CNF.from_lists([[]], num_vars=1)
    with pytest.raises(ValueError):
        CNF.from_lists([[1, 4]], num_vars=3)
    with pytest.raises(ValueError):
        CNF.from_lists([[1, -1]])


@pytest.mark.sat
def test_solve_small_instances():
    result = solve(CNF.from_lists([[1, 2], [-1, 2], [1, -2]]))
    assert result.sat
    assert result.assignment == {1: True, 2: True}

    result = solve(CNF.from_lists([[1, 2], [-1, 2], [1, -2], [-1, -2]]))
    assert result.unsat
    assert result.assignment is None
    assert result.status is SolveStatus.UNSAT

    # no clauses at all is trivially satisfiable
    assert solve(CNF(num_vars=2)).sat


@pytest.mark.sat
def test_solver_is_deterministic():
    cnf = CNF.from_lists([[1, 2, 3], [-1, -2], [-2, -3], [2, 4]])
    first, second = solve(cnf), solve(cnf)
    assert first.assignment == second.assignment
    assert first.decisions == second.decisions


@pytest.mark.sat
def test_budgets():
    cnf = CNF.from_lists([[1, 2], [-1, -2]])
    result = solve(cnf, max_decisions=0)
    assert result.timeout
    assert result.budget["max_decisions"] == 0

    assert solve(cnf, deadline=Deadline(0)).timeout
    assert solve(cnf, deadline=Deadline(None)).sat


@pytest.mark.sat
def test_agrees_with_exhaustive_enumeration(rng):
    for index in range(150):
        cnf = random_cnf(rng, max_vars=12)
        result = solve(cnf)
        model = brute_force(cnf)
        assert result.sat == (model is not None), f"instance {index}"
        if result.sat:
            assert verify(cnf, result.assignment)


@pytest.mark.sat
def test_verify():
    cnf = CNF.from_lists([[1, -2], [2]])
    assert verify(cnf, {1: True, 2: True})
    assert not verify(cnf, {1: False, 2: True})
    assert not verify(cnf, None)


@pytest.mark.sat
def test_builder_gates_fold_constants():
    b = CnfBuilder()
    x, y = b.new_var("x"), b.new_var("y")

    assert b.and_([x, b.true]) == x
    assert b.and_([x, b.false]) == b.false
    assert b.and_([x, -x]) == b.false
    assert b.or_([x, b.true]) == b.true
    assert b.and_([]) == b.true
    # gates are shared between identical requests
    assert b.and_([x, y]) == b.and_([y, x])

    b.add_clause([x, b.true])
    b.add_clause([x, -x])
    before = len(b.clauses)
    b.add_clause([b.false])
    assert len(b.clauses) == before + 1
    assert b.clauses[-1] == (b.false,)
    assert solve(b.build()).unsat


@pytest.mark.sat
def test_tseitin():
    cnf, memo = tseitin(And(Impl(p, q), Iff(q, r)))
    result = solve(cnf)
    assert result.sat
    assert result.assignment[memo[And(Impl(p, q), Iff(q, r))]]

    cnf, _ = tseitin(And(p, Not(Or(p, q))))
    assert solve(cnf).unsat

    with pytest.raises(EncodingError):
        tseitin(Ob(p))
