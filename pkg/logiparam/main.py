"""Entry point for logiparam"""

import os
import sys

from rich.markup import escape
from rich.traceback import install

from logiparam.cli import LogiParamParser
from logiparam.cli.evaluate import eval_cmd
from logiparam.cli.parse import parse_cmd
from logiparam.cli.prove import consistency_cmd, prove_cmd
from logiparam.cli.selfcheck import selfcheck_cmd
from logiparam.cli.verify import verify_cmd
from logiparam.config import EngineConfiguration
from logiparam.defaults import LOGIPARAM_LOGFILE, console, err_console
from logiparam.exceptions import ConfigurationError, LogiParamError
from logiparam.log import init_logfile
from logiparam.utils.file import is_file, remove_file

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def main(argv=None):
    """Entry point to logiparam.

    Returns:
        int: 0 on success, 1 on a negative verdict, 2 on usage, input or configuration errors
    """
    parser = LogiParamParser()
    try:
        args = parser.parse(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    try:
        configuration = setup(args)
        return dispatch(args, configuration)
    except (LogiParamError, ConfigurationError) as err:
        err_console.print(f"[red]error:[/red] {escape(err.msg)}", highlight=False)
        return EXIT_USAGE
    except OSError as err:
        err_console.print(f"[red]error:[/red] {escape(str(err))}", highlight=False)
        return EXIT_USAGE


def setup(args):
    """Initialize color, logging and the validated configuration.

    Args:
        args (argparse.Namespace): parsed command line arguments

    Returns:
        EngineConfiguration: the configuration selected by ``--configfile`` and its fallbacks
    """
    install(show_locals=False)

    no_color = bool(args.no_color or os.getenv("LOGIPARAM_COLOR") == "False")
    console.no_color = no_color
    err_console.no_color = no_color

    if is_file(LOGIPARAM_LOGFILE):
        remove_file(LOGIPARAM_LOGFILE)

    logger = init_logfile(debug=args.debug, loglevel=args.loglevel)

    configuration = EngineConfiguration(args.configfile, verbose=args.verbose)
    configuration.validate()

    if args.verbose:
        console.print(f"Using configuration file: {configuration.file}", style="bold blue")

    logger.info(f"Processing logiparam configuration file: {configuration.file}")
    return configuration


def dispatch(args, configuration):
    """Run the selected subcommand and return its exit code"""

    if args.subcommands == "parse":
        return parse_cmd(args.file, args.logic, ast=args.ast)

    if args.subcommands == "consistency":
        return consistency_cmd(
            args.theory,
            args.logic,
            configuration,
            bounds=args.bounds,
            consequence=args.consequence,
            check_seconds=args.check_seconds,
            verbose=args.verbose,
        )

    if args.subcommands == "prove":
        return prove_cmd(
            args.goal,
            args.logic,
            configuration,
            theory_file=args.theory,
            bounds=args.bounds,
            consequence=args.consequence,
            check_seconds=args.check_seconds,
            verbose=args.verbose,
        )

    if args.subcommands == "verify":
        return verify_cmd(
            args.problem,
            args.logic,
            args.formalizer,
            configuration,
            case_id=args.case,
            iterations=args.iterations,
            bounds=args.bounds,
            consequence=args.consequence,
            check_seconds=args.check_seconds,
            case_seconds=args.case_seconds,
            trace_dir=args.trace_dir,
        )

    if args.subcommands == "eval":
        return eval_cmd(
            args.dataset,
            args.out,
            configuration,
            logics=args.logics,
            formalizers=args.formalizer,
            fmt=args.format,
            config_file=args.config,
            jobs=args.jobs,
            case_log=args.case_log,
            timing=args.timing,
            iterations=args.iterations,
            bounds=args.bounds,
            consequence=args.consequence,
            check_seconds=args.check_seconds,
            case_seconds=args.case_seconds,
        )

    if args.subcommands == "selfcheck":
        return selfcheck_cmd(args.suite, args.count, args.seed)

    err_console.print(f"unknown command: {args.subcommands}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
