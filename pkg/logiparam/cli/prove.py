import logging

from rich.panel import Panel
from rich.syntax import Syntax

from logiparam.defaults import console
from logiparam.logic.parser import parse_formula, parse_formula_file
from logiparam.logic.printer import pretty
from logiparam.prover.certificate import Verdict
from logiparam.prover.engine import ProverSettings, check_consistency, check_entailment
from logiparam.utils.table import create_table

logger = logging.getLogger(__name__)


def engine_settings(configuration, consequence=None, check_seconds=None, logic=None):
    """Prover settings from the configuration, with the single-run flags applied on top"""
    settings = ProverSettings.from_configuration(configuration)
    if consequence and logic:
        settings.consequence[str(logic)] = consequence
    if check_seconds:
        settings.check_seconds = check_seconds
    return settings


def print_certificate(cert, verbose=False):
    """Print the verdict table of ``cert`` and its countermodel or proof"""
    table = create_table(
        columns=["verdict", "method", "bounds searched", "elapsed (ms)", "timed out"],
        data=[
            [
                cert.verdict,
                cert.method,
                ",".join(str(k) for k in cert.bounds_searched) or "-",
                f"{cert.elapsed:.3f}",
                cert.timed_out,
            ]
        ],
        title="Verdict",
    )
    console.print(table)

    if cert.witness is not None:
        title = "Countermodel" if cert.refuted else "Model"
        syntax = Syntax(cert.countermodel_text(), "yaml", theme="ansi_dark")
        console.print(Panel(syntax, title=title))

    if cert.proof and verbose:
        console.print(Panel("\n".join(cert.proof), title="Closed tableau"))


def consistency_cmd(
    theory_file,
    logic,
    configuration,
    bounds=None,
    consequence=None,
    check_seconds=None,
    verbose=False,
):
    """Entry point for ``logiparam consistency``. Returns 0 when the theory has a model."""
    theory = parse_formula_file(theory_file, logic)
    settings = engine_settings(configuration, consequence, check_seconds, logic)

    logger.info(f"Checking consistency of {len(theory)} formula(s) from {theory_file} in {logic}")
    cert = check_consistency(logic, theory, bounds=bounds, settings=settings)
    print_certificate(cert, verbose=verbose)
    return 0 if cert.verdict is Verdict.CONSISTENT else 1


def prove_cmd(
    goal,
    logic,
    configuration,
    theory_file=None,
    bounds=None,
    consequence=None,
    check_seconds=None,
    verbose=False,
):
    """Entry point for ``logiparam prove``.

    Returns:
        int: 0 for Entailed and EntailedUpToBound, 1 otherwise
    """
    theory = parse_formula_file(theory_file, logic) if theory_file else []
    goal = parse_formula(goal, logic)
    settings = engine_settings(configuration, consequence, check_seconds, logic)

    if verbose:
        console.print(f"Goal: {pretty(goal)}", markup=False)
        for f in theory:
            console.print(f"  premise: {pretty(f)}", markup=False)

    cert = check_entailment(logic, theory, goal, bounds=bounds, settings=settings)
    print_certificate(cert, verbose=verbose)
    return 0 if cert.entailed else 1
