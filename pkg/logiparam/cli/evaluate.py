import logging

from logiparam.benchmark.dataset import domain_histogram, load_dataset
from logiparam.benchmark.evaluate import evaluate
from logiparam.benchmark.report import emit_report, infer_format, write_case_log
from logiparam.cli.prove import engine_settings
from logiparam.config import EngineConfiguration
from logiparam.defaults import console
from logiparam.pipeline.formalizers import FormalizerSpec
from logiparam.utils.table import create_table

logger = logging.getLogger(__name__)


def formalizer_specs(names, settings):
    """Expand repeated and comma separated ``--formalizer`` values into specs"""
    specs = []
    for value in names:
        for name in value.split(","):
            if name.strip():
                spec = FormalizerSpec.from_string(name, settings=settings)
                if spec not in specs:
                    specs.append(spec)
    return specs


def print_histogram(cases):
    histogram = domain_histogram(cases)
    rows = [[domain, count] for domain, count in histogram.items()]
    rows.append(["total", len(cases)])
    console.print(create_table(columns=["domain", "cases"], data=rows, title="Dataset"))


def print_summary(table):
    summary = table.aggregate()
    rows = [
        [
            cell.logic,
            cell.formalizer,
            cell.cases,
            f"{cell.valid_pct:.2f}",
            f"{cell.avg_iter:.2f}",
            f"{cell.avg_solve_ms:.2f}",
            f"{cell.syntax_err_pct:.2f}",
        ]
        for cell in summary.cells
    ]
    columns = [
        "logic",
        "formalizer",
        "cases",
        "valid %",
        "iterations",
        "solve (ms)",
        "syntax err %",
    ]
    console.print(create_table(columns=columns, data=rows, title="Summary"))


def eval_cmd(
    dataset,
    out,
    configuration,
    logics=None,
    formalizers=None,
    fmt=None,
    config_file=None,
    jobs=None,
    case_log=None,
    timing=None,
    iterations=None,
    bounds=None,
    consequence=None,
    check_seconds=None,
    case_seconds=None,
):
    """Entry point for ``logiparam eval``.

    Grid and budgets come from ``--config`` when given, otherwise from the global
    configuration; explicit flags win over both.
    """
    if config_file:
        configuration = EngineConfiguration(config_file)
        configuration.validate()

    grid_logics, grid_formalizers = configuration.benchmark_grid()
    logics = logics or grid_logics
    specs = formalizer_specs(formalizers or grid_formalizers, configuration.formalizer_settings)

    cases = load_dataset(dataset)
    print_histogram(cases)

    settings = engine_settings(configuration, check_seconds=check_seconds)
    if bounds:
        settings.bounds = {logic: list(bounds) for logic in settings.bounds}
    if consequence:
        settings.consequence = {logic: consequence for logic in settings.consequence}

    poolsize = jobs or configuration.poolsize
    table, outcomes = evaluate(
        cases,
        logics,
        specs,
        settings=settings,
        t=iterations or configuration.iterations,
        case_seconds=case_seconds or configuration.case_seconds,
        poolsize=poolsize,
        timing=timing or configuration.timing,
    )

    print_summary(table)

    fmt = fmt or infer_format(out)
    emit_report(table, fmt, out)
    console.print(f"Writing {fmt} report to: {out}")

    if case_log:
        write_case_log(outcomes, case_log)
        console.print(f"Writing case log to: {case_log}")

    return 0
