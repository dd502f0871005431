from logiparam.sat.cnf import CNF, CnfBuilder, tseitin
from logiparam.sat.solver import SolveResult, SolveStatus, brute_force, solve, verify

__all__ = [
    "CNF",
    "CnfBuilder",
    "SolveResult",
    "SolveStatus",
    "brute_force",
    "solve",
    "tseitin",
    "verify",
]
