import logging
import os

from logiparam.defaults import DOMAINS
from logiparam.exceptions import DatasetError, ProblemFileError
from logiparam.problems.parser import parse_problem_file
from logiparam.utils.file import is_dir, is_file, walk_tree

logger = logging.getLogger(__name__)


def dataset_files(path):
    """Problem files below ``path``: the file itself or every ``.json`` file of a directory"""
    if is_file(path):
        return [os.path.abspath(path)]
    if is_dir(path):
        return walk_tree(path, ext=[".json"])
    raise ProblemFileError("no such file or directory", path)


def load_dataset(path):
    """Load every case below ``path``.

    Errors of all files are collected first and raised together, so a single
    run reports every broken file.

    Raises:
        DatasetError: if any file fails to parse or two cases share an id
    """
    cases = []
    errors = []
    owners = {}

    for fname in dataset_files(path):
        try:
            loaded = parse_problem_file(fname)
        except ProblemFileError as err:
            errors.append(err)
            continue

        for case in loaded:
            if case.id in owners:
                errors.append(
                    ProblemFileError(
                        f"duplicate id '{case.id}', first defined in {owners[case.id]}", fname
                    )
                )
                continue
            owners[case.id] = fname
            cases.append(case)

    if errors:
        raise DatasetError(errors)

    logger.info(f"Loaded {len(cases)} case(s) from {path}")
    return cases


def domain_histogram(cases):
    """Number of cases per domain, listed in the canonical domain order"""
    histogram = {domain: 0 for domain in DOMAINS}
    for case in cases:
        histogram[case.domain] += 1
    return histogram
