"""
logiparam cli: parse formulas, check theories, verify explanations and run
benchmark grids from the command line.
"""

import argparse

from logiparam import LOGIPARAM_COPYRIGHT, LOGIPARAM_VERSION
from logiparam.defaults import DEFAULT_ITERATIONS, LOGICS

SELFCHECK_SUITES = ("roundtrip", "sat", "kd", "fol", "all")
DEFAULT_SEED = 1234


def positive_number(value):
    """Checks if input is positive number and returns value as an int type.

    >>> positive_number("1")
    1
    """
    try:
        int_val = int(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"Input: {value} is not an integer")

    if int_val <= 0:
        raise argparse.ArgumentTypeError(
            f"Input: {value} converted to int: {int_val} must be a positive number"
        )
    return int_val


def positive_float(value):
    try:
        val = float(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"Input: {value} is not a number")
    if val <= 0:
        raise argparse.ArgumentTypeError(f"Input: {value} must be a positive number")
    return val


def bound_list(value):
    """Parse ``--bounds 1,2,3`` into a sorted list of distinct positive integers

    >>> bound_list("3,1,2")
    [1, 2, 3]
    """
    items = [item.strip() for item in value.split(",") if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError("Must specify at least one bound")
    return sorted({positive_number(item) for item in items})


def logic_list(value):
    """Parse ``--logics KD,FOL``; names are matched case-insensitively"""
    logics = []
    for item in value.split(","):
        name = item.strip().upper()
        if not name:
            continue
        if name not in LOGICS:
            raise argparse.ArgumentTypeError(
                f"Unknown logic '{item.strip()}', expected one of: {', '.join(LOGICS)}"
            )
        if name not in logics:
            logics.append(name)
    if not logics:
        raise argparse.ArgumentTypeError("Must specify at least one logic")
    return logics


def get_parser():
    """Return the parser, used for generating documentation."""
    return LogiParamParser().parser


class LogiParamParser:
    """This class implements the logiparam command line interface.

    - :func:`parse`: parses the arguments passed to ``logiparam``
    - one ``*_menu`` method per subcommand adds its options
    """

    _progname = "logiparam"
    _description = (
        "logiparam verifies natural language explanations by formalizing them in a "
        "selectable logic (FOL, KD, DDLE, DDL_CJ) and checking every step with a prover."
    )
    epilog_str = f"""
    Exit status

    0    the operation succeeded (consistent, entailed, verified)
    1    negative verdict (refuted, inconsistent, failed)
    2    usage, input or configuration error

    {LOGIPARAM_COPYRIGHT}
    """

    def __init__(self):
        self.parent_parser = self.get_parent_parser()

        self.subcommands = {
            "parse": {
                "help": "Parse a formula file and print the formulas",
                "parents": [self.parent_parser["logic"]],
            },
            "consistency": {
                "help": "Check that a theory has a model",
                "parents": [self.parent_parser["logic"], self.parent_parser["engine"]],
            },
            "prove": {
                "help": "Check whether a goal follows from a theory",
                "parents": [self.parent_parser["logic"], self.parent_parser["engine"]],
            },
            "verify": {
                "help": "Run the refinement loop on one problem",
                "parents": [
                    self.parent_parser["logic"],
                    self.parent_parser["engine"],
                    self.parent_parser["pipeline"],
                ],
            },
            "eval": {
                "help": "Evaluate a dataset over logics and formalizers",
                "parents": [self.parent_parser["engine"], self.parent_parser["pipeline"]],
            },
            "selfcheck": {"help": "Run the randomized agreement suites"},
        }

        self.parser = argparse.ArgumentParser(
            prog=self._progname,
            formatter_class=argparse.RawDescriptionHelpFormatter,
            description=self._description,
            usage="%(prog)s [options] [COMMANDS]",
            epilog=self.epilog_str,
        )

        self.subparsers = self.parser.add_subparsers(
            title="COMMANDS", dest="subcommands", metavar=""
        )
        self.subparsers.required = True

        self._build_options()
        self._build_subparsers()

        self.parse_menu()
        self.consistency_menu()
        self.prove_menu()
        self.verify_menu()
        self.eval_menu()
        self.selfcheck_menu()

    def parse(self, argv=None):
        """This method parses arguments passed to logiparam command line interface."""
        return self.parser.parse_args(argv)

    def get_subcommands(self):
        return list(self.subcommands.keys())

    def _build_subparsers(self):
        for name, kwargs in self.subcommands.items():
            self.subparsers.add_parser(
                name, formatter_class=argparse.ArgumentDefaultsHelpFormatter, **kwargs
            )

    def _build_options(self):
        """This method builds the main options for logiparam command line interface."""

        self.logiparam_options = [
            (
                ["-V", "--version"],
                {
                    "action": "version",
                    "version": f"%(prog)s version {LOGIPARAM_VERSION}",
                },
            ),
            (["-c", "--configfile"], {"help": "Specify Path to Configuration File"}),
            (
                ["-d", "--debug"],
                {"action": "store_true", "help": "Stream log messages to stdout"},
            ),
            (
                ["-l", "--loglevel"],
                {
                    "help": "Filter log messages based on logging level",
                    "choices": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                    "default": "DEBUG",
                },
            ),
            (
                ["--no-color"],
                {"help": "Disable colored output", "action": "store_true"},
            ),
            (["--verbose"], {"action": "store_true", "help": "Enable verbose output"}),
            (
                ["--seed"],
                {
                    "type": int,
                    "default": DEFAULT_SEED,
                    "help": "Seed of every randomized suite",
                },
            ),
        ]

        for args, kwargs in self.logiparam_options:
            self.parser.add_argument(*args, **kwargs)

    def get_parent_parser(self):
        parent_parser = {}

        parent_parser["logic"] = argparse.ArgumentParser(add_help=False)
        parent_parser["logic"].add_argument(
            "--logic",
            required=True,
            type=str.upper,
            choices=LOGICS,
            help="Logic the formulas are written in",
        )

        parent_parser["engine"] = argparse.ArgumentParser(add_help=False)
        parent_parser["engine"].add_argument(
            "--bounds",
            type=bound_list,
            help="Comma separated world bounds to sweep, e.g. 1,2,3 (default from configuration)",
        )
        parent_parser["engine"].add_argument(
            "--consequence",
            choices=["global", "local"],
            help="Consequence relation (default from configuration)",
        )
        parent_parser["engine"].add_argument(
            "--check-seconds",
            type=positive_float,
            help="Time budget of one prover check in seconds",
        )

        parent_parser["pipeline"] = argparse.ArgumentParser(add_help=False)
        parent_parser["pipeline"].add_argument(
            "-t",
            "--iterations",
            type=positive_number,
            help=f"Refinement iterations after the first attempt (default: {DEFAULT_ITERATIONS})",
        )
        parent_parser["pipeline"].add_argument(
            "--case-seconds",
            type=positive_float,
            help="Time budget of one case in seconds",
        )
        return parent_parser

    def parse_menu(self):
        """Options for ``logiparam parse``"""
        parser = self.subparsers.choices["parse"]
        parser.add_argument("file", help="Formula file, one formula per line")
        parser.add_argument(
            "--ast", action="store_true", help="Print the syntax tree instead of the formula"
        )

    def consistency_menu(self):
        parser = self.subparsers.choices["consistency"]
        parser.add_argument("theory", help="Formula file holding the theory")

    def prove_menu(self):
        """Options for ``logiparam prove``"""
        parser = self.subparsers.choices["prove"]
        parser.add_argument(
            "theory", nargs="?", help="Formula file holding the premises (empty theory if omitted)"
        )
        parser.add_argument("--goal", required=True, help="Formula to prove")

    def verify_menu(self):
        parser = self.subparsers.choices["verify"]

        verify_args = [
            (["problem"], {"help": "Problem file (JSON)"}),
            (
                ["--formalizer"],
                {
                    "default": "gold-mock",
                    "help": "remote-llm, gold-mock or gap-injecting-mock[:N]",
                },
            ),
            (["--case"], {"help": "Case id, required when the file holds several cases"}),
            (["--trace-dir"], {"help": "Directory receiving the YAML trace of the run"}),
        ]

        for args, kwargs in verify_args:
            parser.add_argument(*args, **kwargs)

    def eval_menu(self):
        """Options for ``logiparam eval``"""
        parser = self.subparsers.choices["eval"]

        eval_args = [
            (["dataset"], {"help": "Problem file or directory of problem files"}),
            (
                ["--logics"],
                {
                    "type": logic_list,
                    "help": "Comma separated logics (default from configuration)",
                },
            ),
            (
                ["--formalizer"],
                {
                    "action": "append",
                    "help": "Formalizer to evaluate, may be repeated or comma separated",
                },
            ),
            (["-o", "--out"], {"required": True, "help": "Report file"}),
            (
                ["--format"],
                {
                    "choices": ["csv", "json", "markdown"],
                    "help": "Report format, inferred from the extension of --out when omitted",
                },
            ),
            (["--config"], {"help": "Configuration file describing the grid"}),
            (
                ["-j", "--jobs"],
                {"type": positive_number, "help": "Number of worker processes"},
            ),
            (["--case-log"], {"help": "Write one JSON record per case to this file"}),
            (
                ["--timing"],
                {
                    "choices": ["wall", "off"],
                    "help": "Record prover wall time, or zero for reproducible reports",
                },
            ),
        ]

        for args, kwargs in eval_args:
            parser.add_argument(*args, **kwargs)

    def selfcheck_menu(self):
        parser = self.subparsers.choices["selfcheck"]
        parser.add_argument(
            "--suite", choices=SELFCHECK_SUITES, default="all", help="Suite to run"
        )
        parser.add_argument(
            "--count",
            type=positive_number,
            default=100,
            help="Random instances per suite",
        )
