import csv
import io
import json
import logging
import os

from logiparam.benchmark.metrics import CSV_COLUMNS
from logiparam.exceptions import LogiParamError
from logiparam.utils.file import read_file, write_file

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "markdown")
EXTENSIONS = {".csv": "csv", ".json": "json", ".md": "markdown", ".markdown": "markdown"}

# (column title, attribute, converter) of the per-metric markdown tables
MARKDOWN_METRICS = (
    ("Valid explanations (%)", "valid_pct", lambda v: f"{v:.2f}"),
    ("Average refinement iterations", "avg_iter", lambda v: f"{v:.2f}"),
    (
        "Average solving time (s) over successful runs",
        "avg_solve_ms",
        lambda v: f"{v / 1000.0:.3f}",
    ),
    ("Syntactic error rate (%)", "syntax_err_pct", lambda v: f"{v:.2f}"),
)


def infer_format(path, default="csv"):
    return EXTENSIONS.get(os.path.splitext(path)[1].lower(), default)


def to_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for cell in table.cells:
        writer.writerow(cell.row())
    return buffer.getvalue()


def _markdown_table(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(" --- " for _ in header) + "|"]
    lines += ["| " + " | ".join(str(value) for value in row) + " |" for row in rows]
    return "\n".join(lines)


def to_markdown(table):
    """One table per metric (logics by formalizers) followed by the per-domain breakdown"""
    summary = table.aggregate()
    formalizers = summary.formalizers()
    lookup = {(c.logic, c.formalizer): c for c in summary.cells}

    sections = []
    for title, attribute, convert in MARKDOWN_METRICS:
        rows = []
        for logic in summary.logics():
            row = [logic]
            for formalizer in formalizers:
                cell = lookup.get((logic, formalizer))
                row.append(convert(getattr(cell, attribute)) if cell else "-")
            rows.append(row)
        sections.append(f"## {title}\n\n" + _markdown_table(["logic", *formalizers], rows))

    breakdown = [
        [
            c.logic,
            c.formalizer,
            c.domain,
            c.cases,
            f"{c.valid_pct:.2f}",
            f"{c.avg_iter:.2f}",
            f"{c.avg_solve_ms / 1000.0:.3f}",
            f"{c.syntax_err_pct:.2f}",
        ]
        for c in table.cells
    ]
    header = [
        "logic",
        "formalizer",
        "domain",
        "cases",
        "valid %",
        "iterations",
        "solve (s)",
        "syntax err %",
    ]
    sections.append("## Per-domain breakdown\n\n" + _markdown_table(header, breakdown))
    return "\n\n".join(sections) + "\n"


def render_report(table, fmt):
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return table.to_json()
    if fmt == "markdown":
        return to_markdown(table)
    raise LogiParamError(f"unknown report format '{fmt}', expected one of {FORMATS}")


def emit_report(table, fmt, path):
    """Write ``table`` to ``path`` as csv, json or markdown.

    Raises:
        LogiParamError: if the format is unknown or the path is not writable
    """
    write_file(path, render_report(table, fmt))
    logger.info(f"Wrote {fmt} report with {len(table)} cell(s) to {path}")


def write_case_log(outcomes, path):
    """Write one JSON record per case outcome"""
    lines = [json.dumps(outcome.record(), sort_keys=True) for outcome in outcomes]
    write_file(path, "".join(line + "\n" for line in lines))


def read_case_log(path):
    """Load the records written by :func:`write_case_log`"""
    return [json.loads(line) for line in read_file(path).splitlines() if line.strip()]
