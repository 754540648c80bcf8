"""
Manages logging configuration for cliquebound.
"""

import copy
import logging
import logging.config

LOGGING_CONFIG = {
    "version": 1,
    "formatters": {
        "simple": {
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        },
        "workers": {
            "format": "%(asctime)s - %(processName)s - %(name)s - %(levelname)s - %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
            "stream": "ext://sys.stderr",
            "level": logging.DEBUG,
        },
    },
    "loggers": {
        "cliquebound": {
            "handlers": ["console"],
            "level": logging.INFO,
            "propagate": False,
        },
        "root": {
            "handlers": ["console"],
            "level": logging.WARNING,
            "propagate": False,
        },
    },
    "disable_existing_loggers": False,
}


def setup_logging(level: int | str = logging.INFO):
    """
    Configures the cliquebound logger. Records and summaries may be streamed to
    stdout, so log messages always go to stderr. At DEBUG the pool worker that
    emitted each message is named too.
    """
    config = copy.deepcopy(LOGGING_CONFIG)
    config["loggers"]["cliquebound"]["level"] = level
    if level in (logging.DEBUG, "DEBUG"):
        config["handlers"]["console"]["formatter"] = "workers"
    logging.config.dictConfig(config)
