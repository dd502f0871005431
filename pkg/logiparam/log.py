"""
Methods related to logiparam logging
"""

import logging
import os

from rich.logging import RichHandler

from logiparam.defaults import LOGIPARAM_LOGFILE, console
from logiparam.utils.file import create_dir


def init_logfile(logfile=LOGIPARAM_LOGFILE, debug=None, loglevel="DEBUG"):
    """Initialize the logiparam logger. Records are written to ``logfile`` and,
    when ``debug`` is set, streamed to the console through rich.

    Args:
        logfile (str): Path to logfile where logiparam will write logs
        debug (bool, optional): Stream records to the console, set via ``logiparam --debug``
        loglevel (str, optional): Level passed to ``logging.Logger.setLevel``, set via
            ``logiparam --loglevel``
    """

    formatter = logging.Formatter(
        "%(asctime)s [%(filename)s:%(lineno)s - %(funcName)5s() ] - [%(levelname)s] %(message)s"
    )

    logger = logging.getLogger("logiparam")

    # repeated calls (tests, the selfcheck command) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    parent_dir = os.path.dirname(logfile)
    create_dir(parent_dir)

    fh = logging.FileHandler(logfile)
    fh.setFormatter(formatter)
    logger.addHandler(fh)
    logger.setLevel(loglevel)

    if debug:
        rich_handler = RichHandler(
            console=console,
            rich_tracebacks=True,
            markup=True,
            show_time=True,
            show_level=True,
            level=logging.NOTSET,
        )

        logger.addHandler(rich_handler)

    return logger
