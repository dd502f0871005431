"""
logiparam defaults, including environment variables and paths, are defined
or derived here.
"""

import os

from rich.console import Console

console = Console(soft_wrap=True)
err_console = Console(stderr=True, soft_wrap=True)

LOGIPARAM_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SCHEMA_ROOT = os.path.join(LOGIPARAM_ROOT, "logiparam", "schemas")
PROMPTS_ROOT = os.path.join(LOGIPARAM_ROOT, "logiparam", "pipeline", "prompts")
FIXTURES_ROOT = os.path.join(LOGIPARAM_ROOT, "fixtures")

LOGIPARAM_UNITTEST_ROOT = os.path.join(LOGIPARAM_ROOT, "tests")

LOGIPARAM_USER_HOME = os.path.join(os.path.expanduser("~"), ".logiparam")
USER_SETTINGS_FILE = os.path.join(LOGIPARAM_USER_HOME, "config.yml")

var_dir = os.getenv("LOGIPARAM_VAR_DIR")
VAR_DIR = var_dir or os.path.join(LOGIPARAM_ROOT, "var")

LOGIPARAM_LOGFILE = os.path.join(VAR_DIR, "logiparam.log")
DEFAULT_TRACE_DIR = os.path.join(VAR_DIR, "traces")

DEFAULT_SETTINGS_FILE = os.path.join(
    LOGIPARAM_ROOT, "logiparam", "settings", "config.yml"
)
DEFAULT_SETTINGS_SCHEMA = os.path.join(SCHEMA_ROOT, "settings.schema.json")
PROBLEM_SCHEMA = os.path.join(SCHEMA_ROOT, "problem.schema.json")

# environment variables read by the remote formalizer and the configuration layer
LLM_URL_ENV = "LOGIPARAM_LLM_URL"
LLM_KEY_ENV = "LOGIPARAM_LLM_KEY"
CONFIGFILE_ENV = "LOGIPARAM_CONFIGFILE"

LOGICS = ("FOL", "KD", "DDLE", "DDL_CJ")
DOMAINS = ("classical", "commonsense", "default", "modalities", "bioethics")

# default iteration budget for the refinement loop
DEFAULT_ITERATIONS = 3

# engine settings used when a settings file leaves a key out
FALLBACK_BOUNDS = {
    "FOL": [1, 2, 3, 4],
    "KD": [1, 2, 3, 4],
    "DDLE": [1, 2, 3, 4],
    "DDL_CJ": [1, 2, 3],
}
FALLBACK_MAX_BOUND = {"FOL": 5, "KD": 5, "DDLE": 5, "DDL_CJ": 3}
FALLBACK_CONSEQUENCE = {"FOL": "global", "KD": "global", "DDLE": "local", "DDL_CJ": "local"}
