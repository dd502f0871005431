"""
Loading of the JSON schemas shipped with logiparam and of YAML settings files.

Both loaders raise instead of exiting so the command line can report the problem
and return its configuration-error exit code.
"""

import logging
import os

import yaml

from logiparam.exceptions import ConfigurationError, LogiParamError
from logiparam.utils.file import load_json

logger = logging.getLogger(__name__)

SCHEMA_SUFFIX = ".schema.json"
SETTINGS_SUFFIXES = (".yml", ".yaml")


def load_schema(path):
    """Load a JSON schema shipped with logiparam, named ``*.schema.json``.

    Raises:
        LogiParamError: if the file is missing or is not a schema file
    """
    if not os.path.isfile(path):
        raise LogiParamError(f"schema file {path} does not exist")
    if not path.endswith(SCHEMA_SUFFIX):
        raise LogiParamError(f"{path} is not a schema file, expected a '{SCHEMA_SUFFIX}' suffix")

    schema = load_json(path)
    logger.debug(f"Loaded schema {schema.get('$id', path)}")
    return schema


def load_settings(path):
    """Load a YAML settings file into a dictionary. An empty file loads as ``{}``.

    Args:
        path (str): settings file ending in ``.yml`` or ``.yaml``

    Raises:
        ConfigurationError: if the file is missing, has another suffix, is not valid
            YAML or its top level is not a mapping
    """
    if not os.path.isfile(path):
        raise ConfigurationError(None, path, "configuration file not found")
    if not path.endswith(SETTINGS_SUFFIXES):
        raise ConfigurationError(
            None, path, f"configuration file must end in {' or '.join(SETTINGS_SUFFIXES)}"
        )

    with open(path, "r") as fd:
        try:
            document = yaml.safe_load(fd)
        except yaml.YAMLError as err:
            raise ConfigurationError(None, path, f"invalid YAML: {err}")

    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigurationError(
            document, path, f"expected a mapping at the top level, got {type(document).__name__}"
        )
    return document
