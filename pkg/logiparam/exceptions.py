import yaml

PARSE_CATEGORIES = ("lexical", "grammar", "signature-violation", "scope")


class LogiParamError(Exception):
    """Class responsible for error handling in logiparam. This is a sub-class
    of Exception class."""

    def __init__(self, msg, *args):
        """This class is used for printing error message when exception is raised.

        Args:
            msg (str): message to print
            *args (list): extra arguments to class for printing message
        """
        self.msg = [msg]
        if args:
            for arg in args:
                self.msg.append(str(arg))

        self.msg = "\n".join(self.msg)

    def __str__(self):
        return repr(self.msg)


class ParseError(LogiParamError):
    """Raised when a formula or a problem document cannot be parsed.

    The ``span`` is a byte range ``(start, end)`` into the UTF-8 encoded input and
    ``prefix_end`` marks where the successfully parsed prefix stops, which is never
    past the start of the span. ``field`` names the problem-file path of an embedded
    formula, for instance ``gold.KD.steps[2]``.
    """

    def __init__(
        self, message, span=(0, 0), category="grammar", prefix_end=None, field=None
    ):
        if category not in PARSE_CATEGORIES:
            raise ValueError(f"Unknown parse error category: {category}")

        self.message = message
        self.span = span
        self.category = category
        self.prefix_end = span[0] if prefix_end is None else min(prefix_end, span[0])
        self.field = field

        where = f"{field}: " if field else ""
        super().__init__(f"{where}[{category}] {message} at bytes {span[0]}-{span[1]}")

    def with_field(self, field):
        """Return a copy of this error located at ``field`` of a problem document"""
        return ParseError(
            self.message,
            span=self.span,
            category=self.category,
            prefix_end=self.prefix_end,
            field=field,
        )


class ProblemFileError(LogiParamError):
    """Exception if there is an issue with a problem file"""

    def __init__(self, msg, path=None):
        self.path = path
        super().__init__(f"[{path}]: {msg}" if path else msg)


class DatasetError(LogiParamError):
    """Aggregates every problem-file error found while loading a dataset"""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__(
            f"{len(self.errors)} error(s) while loading dataset",
            *[err.msg for err in self.errors],
        )


class LogicMismatchError(LogiParamError):
    """A formula, model or theory was used with a logic that does not admit it"""


class ModelError(LogiParamError):
    """A model violates the frame conditions of its logic"""


class EvaluationError(LogiParamError):
    """A formula refers to a variable, constant or predicate the model does not interpret"""


class EncodingError(LogiParamError):
    """Raised when a bounded encoding cannot be built, e.g. the bound exceeds the maximum"""


class FormalizerError(LogiParamError):
    """A formalizer spec cannot serve the requested case"""


class TransportError(LogiParamError):
    """The remote formalizer could not be reached after all retries"""


class BudgetExceeded(LogiParamError):
    """A prover check ran out of its time or decision budget"""

    def __init__(self, msg, certificate=None):
        self.certificate = certificate
        super().__init__(msg)


class ConfigurationError(Exception):
    """ConfigurationError is raised when their is an issue with logiparam configuration file"""

    def __init__(self, config, settings_file, msg):
        self.config = config
        self.settings_file = settings_file
        self.msg = msg
        if config is not None:
            print(yaml.dump(self.config, default_flow_style=False, sort_keys=False))

    def __str__(self):
        return repr(f"[{self.settings_file}]: {self.msg}")
