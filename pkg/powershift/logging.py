import logging

from powershift.config import settings

LOGGER_NAME = "powershift"

logger = logging.getLogger(LOGGER_NAME)

logger.setLevel(settings.log_level.upper())

# Only add a handler if none present (avoid duplicates on re-import)
if not logger.handlers:
    _h = logging.StreamHandler()
    _h.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s %(message)s"))  # timestamp first
    logger.addHandler(_h)
    logger.propagate = False  # keep CLI output off the root logger


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger, e.g. ``powershift.scenario``."""
    return logger.getChild(name)
