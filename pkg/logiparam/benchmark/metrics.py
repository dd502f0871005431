"""
Metric cells per (logic, formalizer, domain).

- ``valid_pct``: share of cases ending Verified or VerifiedUpToBound
- ``avg_iter``: mean refinement iterations over all cases of the cell
- ``avg_solve_ms``: mean prover time over the successful cases only
- ``syntax_err_pct``: share of formalization attempts that did not parse
"""

import json
from dataclasses import asdict, dataclass, field
from typing import List

from logiparam.defaults import DOMAINS, LOGICS

CSV_COLUMNS = (
    "logic",
    "formalizer",
    "domain",
    "cases",
    "valid_pct",
    "avg_iter",
    "avg_solve_ms",
    "syntax_err_pct",
)

ALL_DOMAINS = "all"


def _pct(part, whole):
    return round(100.0 * part / whole, 2) if whole else 0.0


def _ratio(total, count):
    return round(total / count, 2) if count else 0.0


@dataclass(frozen=True)
class MetricsCell:
    """One row of the metrics table. The trailing counters keep the raw totals
    the rates are computed from, so cells can be merged without rounding drift."""

    logic: str
    formalizer: str
    domain: str
    cases: int
    valid_pct: float
    avg_iter: float
    avg_solve_ms: float
    syntax_err_pct: float
    successes: int = 0
    attempts: int = 0
    syntax_errors: int = 0
    iteration_total: int = 0
    solve_ms_total: float = 0.0

    @classmethod
    def from_totals(
        cls,
        logic,
        formalizer,
        domain,
        cases,
        successes,
        attempts,
        syntax_errors,
        iteration_total,
        solve_ms_total,
    ):
        return cls(
            logic=logic,
            formalizer=formalizer,
            domain=domain,
            cases=cases,
            valid_pct=_pct(successes, cases),
            avg_iter=_ratio(iteration_total, cases),
            avg_solve_ms=_ratio(solve_ms_total, successes),
            syntax_err_pct=_pct(syntax_errors, attempts),
            successes=successes,
            attempts=attempts,
            syntax_errors=syntax_errors,
            iteration_total=iteration_total,
            solve_ms_total=round(solve_ms_total, 3),
        )

    @classmethod
    def from_records(cls, logic, formalizer, domain, records):
        """Aggregate case-log records (see ``CaseOutcome.record``) into one cell"""
        successes = [r for r in records if r["status"] in ("Verified", "VerifiedUpToBound")]
        return cls.from_totals(
            logic,
            formalizer,
            domain,
            cases=len(records),
            successes=len(successes),
            attempts=sum(r["attempts"] for r in records),
            syntax_errors=sum(r["syntax_errors"] for r in records),
            iteration_total=sum(r["iterations"] for r in records),
            solve_ms_total=sum(r["solving_ms"] for r in successes),
        )

    def row(self):
        return [getattr(self, column) for column in CSV_COLUMNS]


def _order(key):
    logic, formalizer, domain = key
    logic_rank = LOGICS.index(logic) if logic in LOGICS else len(LOGICS)
    domain_rank = DOMAINS.index(domain) if domain in DOMAINS else len(DOMAINS)
    return (logic_rank, formalizer, domain_rank, domain)


@dataclass
class MetricsTable:
    cells: List[MetricsCell] = field(default_factory=list)

    @classmethod
    def from_records(cls, records):
        groups = {}
        for record in records:
            key = (record["logic"], record["formalizer"], record["domain"])
            groups.setdefault(key, []).append(record)
        return cls(
            [MetricsCell.from_records(*key, groups[key]) for key in sorted(groups, key=_order)]
        )

    @classmethod
    def from_outcomes(cls, outcomes):
        """Recompute every cell from a per-case log of :class:`CaseOutcome` objects"""
        return cls.from_records([outcome.record() for outcome in outcomes])

    def aggregate(self):
        """One cell per (logic, formalizer) across all domains, recomputed from the
        summed totals of its cells"""
        groups = {}
        for cell in self.cells:
            groups.setdefault((cell.logic, cell.formalizer), []).append(cell)

        merged = []
        for (logic, formalizer), cells in groups.items():
            merged.append(
                MetricsCell.from_totals(
                    logic,
                    formalizer,
                    ALL_DOMAINS,
                    cases=sum(c.cases for c in cells),
                    successes=sum(c.successes for c in cells),
                    attempts=sum(c.attempts for c in cells),
                    syntax_errors=sum(c.syntax_errors for c in cells),
                    iteration_total=sum(c.iteration_total for c in cells),
                    solve_ms_total=sum(c.solve_ms_total for c in cells),
                )
            )
        return MetricsTable(merged)

    def logics(self):
        return sorted({c.logic for c in self.cells}, key=lambda l: _order((l, "", "")))

    def formalizers(self):
        return sorted({c.formalizer for c in self.cells})

    def domains(self):
        return sorted({c.domain for c in self.cells}, key=lambda d: _order(("", "", d)))

    def to_json(self):
        return json.dumps({"cells": [asdict(c) for c in self.cells]}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls([MetricsCell(**cell) for cell in data["cells"]])

    def __len__(self):
        return len(self.cells)
