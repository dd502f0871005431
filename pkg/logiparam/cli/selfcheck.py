"""
``logiparam selfcheck`` runs randomized agreement suites between independent
procedures of the package:

- roundtrip: pretty printing then parsing gives back the same formula
- sat: the DPLL solver agrees with exhaustive enumeration and its models verify
- kd: the KD tableau agrees with the bounded model finder on local validity
- fol: Herbrand grounding agrees with enumerating every finite interpretation
"""

import logging
import random
from dataclasses import dataclass, field
from typing import List

from rich.markup import escape

from logiparam.defaults import console
from logiparam.logic.formula import LogicId, predicates
from logiparam.logic.generate import FormulaGenerator
from logiparam.logic.parser import parse_formula
from logiparam.logic.printer import pretty
from logiparam.prover.grounding import ground_fol, herbrand_constants
from logiparam.prover.tableau import kd_tableau
from logiparam.sat.cnf import CNF
from logiparam.sat.solver import brute_force, solve, verify
from logiparam.semantics.encoder import Consequence, Mode, encode_bounded
from logiparam.semantics.evaluate import all_interpretations, eval_fol
from logiparam.utils.table import create_table

logger = logging.getLogger(__name__)

KD_BOUNDS = (1, 2, 3, 4)
FOL_PREDICATES = {"Person": 1, "Agent": 2}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements


def roundtrip_suite(rng, count):
    result = SuiteResult("roundtrip")
    for logic in LogicId:
        generator = FormulaGenerator(logic, rng)
        for _ in range(count):
            f = generator.formula(depth=4)
            text = pretty(f)
            result.checked += 1
            if parse_formula(text, logic) != f:
                result.disagreements.append(f"{logic}: {text}")
    return result


def random_cnf(rng, max_vars=12):
    num_vars = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, 4 * num_vars)):
        width = min(rng.randint(1, 3), num_vars)
        variables = rng.sample(range(1, num_vars + 1), width)
        clauses.append([rng.choice((1, -1)) * var for var in variables])
    return CNF.from_lists(clauses, num_vars=num_vars)


def sat_suite(rng, count):
    result = SuiteResult("sat")
    for index in range(count):
        cnf = random_cnf(rng)
        outcome = solve(cnf)
        expected = brute_force(cnf) is not None
        result.checked += 1
        if outcome.sat != expected:
            result.disagreements.append(f"instance {index}: solver {outcome.status.value}")
        elif outcome.sat and not verify(cnf, outcome.assignment):
            result.disagreements.append(f"instance {index}: model fails verification")
    return result


def bounded_kd_valid(f, bounds=KD_BOUNDS):
    """True when no countermodel of ``f`` at world 0 exists within ``bounds``"""
    for k in bounds:
        cnf, _ = encode_bounded(
            LogicId.KD, [], Mode.REFUTATION, goal=f, k=k, consequence=Consequence.LOCAL
        )
        if solve(cnf).sat:
            return False
    return True


def kd_suite(rng, count):
    result = SuiteResult("kd")
    generator = FormulaGenerator(LogicId.KD, rng, max_modal_depth=2)
    for _ in range(count):
        f = generator.formula(depth=4)
        result.checked += 1
        if kd_tableau(f).valid != bounded_kd_valid(f):
            result.disagreements.append(pretty(f))
    return result


def enumerated_countermodel(theory, goal, domain):
    """Search every interpretation over ``domain`` for a model of ``theory`` falsifying ``goal``"""
    arities = {}
    for f in list(theory) + [goal]:
        for name, used in predicates(f).items():
            arities[name] = min(used)
    for interp in all_interpretations(domain, arities):
        if all(eval_fol(interp, f) for f in theory) and not eval_fol(interp, goal):
            return interp
    return None


def fol_suite(rng, count):
    result = SuiteResult("fol")
    generator = FormulaGenerator(LogicId.FOL, rng, predicates=FOL_PREDICATES)
    for _ in range(count):
        theory = generator.theory(2, depth=3)
        goal = generator.formula(depth=3)
        domain = herbrand_constants(theory + [goal])

        grounding = ground_fol(theory, goal, domain=domain)
        builder = grounding.encode(refute=True)
        grounded = solve(builder.build()).sat
        enumerated = enumerated_countermodel(theory, goal, domain) is not None

        result.checked += 1
        if grounded != enumerated:
            sequent = ", ".join(pretty(f) for f in theory)
            result.disagreements.append(f"{sequent} |- {pretty(goal)}")
    return result


SUITES = {
    "roundtrip": roundtrip_suite,
    "sat": sat_suite,
    "kd": kd_suite,
    "fol": fol_suite,
}


def run_suites(suite, count, seed):
    """Run ``suite`` (or every suite for ``all``) with a generator seeded by ``seed``"""
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        logger.info(f"Running {name} suite with {count} instance(s), seed {seed}")
        results.append(SUITES[name](rng, count))
    return results


def selfcheck_cmd(suite, count, seed):
    """Entry point for ``logiparam selfcheck``. Returns 0 when every suite agrees."""
    results = run_suites(suite, count, seed)

    rows = [[r.name, r.checked, len(r.disagreements), "PASS" if r.ok else "FAIL"] for r in results]
    table = create_table(
        columns=["suite", "checked", "disagreements", "status"],
        data=rows,
        title=f"Self-check (seed {seed})",
    )
    console.print(table)

    for r in results:
        for item in r.disagreements[:10]:
            console.print(f"[red]{r.name}[/red]: {escape(item)}", highlight=False)

    return 0 if all(r.ok for r in results) else 1
