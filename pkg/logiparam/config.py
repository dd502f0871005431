import logging
import os

from jsonschema.exceptions import ValidationError

from logiparam.defaults import (
    CONFIGFILE_ENV,
    DEFAULT_ITERATIONS,
    DEFAULT_SETTINGS_FILE,
    DEFAULT_SETTINGS_SCHEMA,
    FALLBACK_BOUNDS,
    FALLBACK_CONSEQUENCE,
    FALLBACK_MAX_BOUND,
    LOGICS,
    USER_SETTINGS_FILE,
    console,
)
from logiparam.exceptions import ConfigurationError
from logiparam.schemas.defaults import custom_validator
from logiparam.schemas.utils import load_schema, load_settings
from logiparam.utils.file import resolve_path
from logiparam.utils.tools import deep_get

logger = logging.getLogger(__name__)


class EngineConfiguration:
    """This class is an interface to the logiparam configuration file"""

    def __init__(self, settings_file=None, verbose=None):
        """Resolve the path to the configuration file and load it with :func:`load`.

        Args:
            settings_file (str, optional): path to logiparam configuration file
            verbose (bool, optional): print progress messages
        """
        self.verbose = verbose
        self._file = settings_file
        self.config = None

        self.resolve()
        self.load()

    def load(self):
        """Loads configuration file"""
        self.config = load_settings(self._file)
        if self.verbose:
            console.print("Loading configuration file ... COMPLETE", style="bold blue")

    @property
    def file(self):
        return self._file

    @file.setter
    def file(self, path):
        self._file = path

    def resolve(self):
        """Resolve the configuration file. The order of precedence is as follows:

        1. command line argument via ``logiparam --configfile <path>``
        2. environment variable ``LOGIPARAM_CONFIGFILE``
        3. User Configuration: **$HOME/.logiparam/config.yml**
        4. Default Configuration: **$LOGIPARAM_ROOT/logiparam/settings/config.yml**

        A file named by the first two sources must exist, only the user configuration
        is optional.

        Raises:
            ConfigurationError: if the file given on the command line or in
                ``LOGIPARAM_CONFIGFILE`` does not exist
        """

        for requested in (self._file, os.getenv(CONFIGFILE_ENV)):
            if requested:
                path = resolve_path(requested)
                if not path:
                    raise ConfigurationError(None, requested, "configuration file not found")
                self._file = path
                return

        self._file = resolve_path(USER_SETTINGS_FILE) or DEFAULT_SETTINGS_FILE

    def validate(self):
        """Validate the configuration with the settings schema.

        Raises:
            ConfigurationError: if the document does not validate or a bound exceeds its maximum
        """

        logger.debug(f"Validating configuration file with schema: {DEFAULT_SETTINGS_SCHEMA}")
        config_schema = load_schema(DEFAULT_SETTINGS_SCHEMA)

        try:
            custom_validator(document=self.config, schema=config_schema)
        except ValidationError as err:
            raise ConfigurationError(self.config, self.file, err.message)

        for logic in LOGICS:
            top = self.max_bound(logic)
            too_large = [k for k in self.bounds(logic) if k > top]
            if too_large:
                raise ConfigurationError(
                    self.config,
                    self.file,
                    f"bounds {too_large} for {logic} exceed max_bound {top}",
                )

        logger.debug(f"Configuration file {self.file} is valid")

    def bounds(self, logic):
        """Return the list of bounds swept for ``logic``"""
        return list(
            deep_get(self.config, "engine", "bounds", str(logic))
            or FALLBACK_BOUNDS[str(logic)]
        )

    def max_bound(self, logic):
        return (
            deep_get(self.config, "engine", "max_bound", str(logic))
            or FALLBACK_MAX_BOUND[str(logic)]
        )

    def consequence(self, logic):
        return (
            deep_get(self.config, "engine", "consequence", str(logic))
            or FALLBACK_CONSEQUENCE[str(logic)]
        )

    @property
    def check_seconds(self):
        return deep_get(self.config, "engine", "budgets", "check_seconds") or 5

    @property
    def case_seconds(self):
        return deep_get(self.config, "engine", "budgets", "case_seconds") or 60

    @property
    def max_decisions(self):
        return deep_get(self.config, "engine", "max_decisions") or 200000

    @property
    def iterations(self):
        return deep_get(self.config, "pipeline", "iterations") or DEFAULT_ITERATIONS

    @property
    def formalizer_settings(self):
        return deep_get(self.config, "pipeline", "formalizer") or {}

    @property
    def poolsize(self):
        return deep_get(self.config, "benchmark", "poolsize") or 1

    @property
    def timing(self):
        return deep_get(self.config, "benchmark", "timing") or "wall"

    def benchmark_grid(self):
        """Return (logics, formalizer names) listed under ``benchmark``"""
        return (
            deep_get(self.config, "benchmark", "logics") or list(LOGICS),
            deep_get(self.config, "benchmark", "formalizers") or ["gold-mock"],
        )
