__version__ = "0.3"
LOGIPARAM_VERSION = __version__
LOGIPARAM_COPYRIGHT = "Copyright (c) 2025-2026, the logiparam developers. All rights reserved."
