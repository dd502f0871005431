import logging

import yaml
from rich.syntax import Syntax

from logiparam.cli.prove import engine_settings
from logiparam.defaults import console
from logiparam.exceptions import ProblemFileError
from logiparam.pipeline.formalizers import FormalizerSpec
from logiparam.pipeline.runner import run_case, write_trace
from logiparam.problems.parser import parse_problem_file
from logiparam.utils.table import create_table

logger = logging.getLogger(__name__)


def select_case(cases, case_id, path):
    """Pick the case named ``case_id``, or the only case of a single-case file"""
    if case_id is None:
        if len(cases) != 1:
            raise ProblemFileError(
                f"file holds {len(cases)} cases, choose one with --case", path
            )
        return cases[0]

    for case in cases:
        if case.id == case_id:
            return case
    raise ProblemFileError(f"no case with id '{case_id}'", path)


def verify_cmd(
    problem_file,
    logic,
    formalizer,
    configuration,
    case_id=None,
    iterations=None,
    bounds=None,
    consequence=None,
    check_seconds=None,
    case_seconds=None,
    trace_dir=None,
):
    """Entry point for ``logiparam verify``: one run of the refinement loop.

    Returns:
        int: 0 when the explanation verified, 1 otherwise
    """
    problem = select_case(parse_problem_file(problem_file), case_id, problem_file)
    spec = FormalizerSpec.from_string(formalizer, settings=configuration.formalizer_settings)
    settings = engine_settings(configuration, consequence, check_seconds, logic)

    outcome = run_case(
        problem,
        logic,
        spec,
        t=iterations or configuration.iterations,
        bounds=bounds,
        settings=settings,
        case_seconds=case_seconds or configuration.case_seconds,
    )

    text = yaml.safe_dump(outcome.to_dict(), sort_keys=False, allow_unicode=True)
    console.print(Syntax(text, "yaml", theme="ansi_dark"))

    table = create_table(
        columns=["case", "logic", "formalizer", "status", "iterations", "solving (ms)"],
        data=[
            [
                outcome.case_id,
                outcome.logic,
                outcome.formalizer,
                outcome.status,
                outcome.iterations_used,
                outcome.solving_time,
            ]
        ],
    )
    console.print(table)

    if trace_dir:
        path = write_trace(outcome, trace_dir)
        console.print(f"Writing trace to: {path}")

    return 0 if outcome.success else 1
