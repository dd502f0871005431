"""
Runs every (case, logic, formalizer) cell of an evaluation grid through the
refinement loop and aggregates the outcomes into a :class:`MetricsTable`.

Remote formalizers get one :class:`ChatClient` per formalizer in every process
of the run. All of them share one :class:`LLMGateway`, held by a
:class:`multiprocessing.managers.SyncManager` when cases run in a pool.
"""

import logging
import multiprocessing as mp
import os

from logiparam.benchmark.metrics import MetricsTable
from logiparam.defaults import console
from logiparam.logic.formula import LogicId
from logiparam.pipeline.formalizers import FormalizerKind
from logiparam.pipeline.llm import ChatClient, LLMGateway
from logiparam.pipeline.runner import run_case
from logiparam.prover.engine import ProverSettings

logger = logging.getLogger(__name__)

# clients of the current worker process, keyed by FormalizerSpec
_worker_clients = {}


def grid(dataset, logics, specs):
    """The cells to run, in dataset order. Mock formalizers skip cases without gold."""
    cells = []
    for problem in dataset:
        for logic in logics:
            for spec in specs:
                if spec.kind is not FormalizerKind.REMOTE and not problem.has_gold(logic):
                    logger.debug(f"skipping {problem.id}/{logic}/{spec}: no gold formalization")
                    continue
                cells.append((problem, logic, spec))
    return cells


def remote_clients(specs, gateway):
    """One client per remote formalizer, every one of them behind ``gateway``"""
    return {
        spec: ChatClient.from_settings(spec.settings, gateway=gateway)
        for spec in specs
        if spec.kind is FormalizerKind.REMOTE
    }


def _init_worker(specs, gateway):
    _worker_clients.clear()
    _worker_clients.update(remote_clients(specs, gateway))


def _run_cell(problem, logic, spec, options):
    client = options.pop("client", None) or _worker_clients.get(spec)
    return run_case(problem, logic, spec, client=client, **options)


def evaluate(
    dataset,
    logics,
    specs,
    settings=None,
    t=3,
    case_seconds=60,
    poolsize=1,
    timing="wall",
    client=None,
):
    """Evaluate ``dataset`` over the grid ``logics`` x ``specs``.

    Args:
        dataset (list): :class:`ProblemDoc` cases
        logics (list): logics to formalize in
        specs (list): :class:`FormalizerSpec` objects
        settings (ProverSettings, optional): prover configuration
        t (int): refinement iterations per case
        case_seconds (float): per-case budget
        poolsize (int): worker processes, 1 runs in-process
        timing (str): ``wall`` or ``off``
        client (ChatClient, optional): remote client for every remote cell, in-process only

    Returns:
        tuple: the :class:`MetricsTable` and the list of :class:`CaseOutcome` in grid order
    """
    logics = [LogicId.parse(logic) for logic in logics]
    specs = list(specs)
    if not logics:
        raise ValueError("evaluation needs at least one logic")
    if not specs:
        raise ValueError("evaluation needs at least one formalizer")

    options = {
        "t": t,
        "settings": settings or ProverSettings(),
        "case_seconds": case_seconds,
        "timing": timing,
    }
    cells = grid(dataset, logics, specs)
    logger.info(f"Evaluating {len(cells)} cell(s) with {poolsize} worker(s)")

    remote = [spec for spec in specs if spec.kind is FormalizerKind.REMOTE]
    gateway_settings = remote[0].settings if remote else {}

    if poolsize <= 1:
        clients = remote_clients(remote, LLMGateway.from_settings(gateway_settings))
        outcomes = [
            _run_cell(problem, logic, spec, {**options, "client": client or clients.get(spec)})
            for problem, logic, spec in cells
        ]
    else:
        if client is not None:
            logger.warning("ignoring the given client, pool workers build their own")
        num_workers = min(poolsize, os.cpu_count() or 1)
        console.print(f"Spawning {num_workers} processes for {len(cells)} cell(s)")
        with mp.Manager() as manager:
            gateway = LLMGateway.from_settings(gateway_settings, manager=manager)
            with mp.Pool(num_workers, initializer=_init_worker, initargs=(remote, gateway)) as pool:
                results = [
                    pool.apply_async(_run_cell, args=(problem, logic, spec, options))
                    for problem, logic, spec in cells
                ]
                outcomes = [result.get() for result in results]

    return MetricsTable.from_outcomes(outcomes), outcomes
