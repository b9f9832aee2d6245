"""
Root logger setup.
"""

import logging
import sys

from src.utils.settings import LoggingSettings


def setup_logging(settings: LoggingSettings) -> logging.Logger:
    """Send log records to standard error so standard output stays machine-readable."""
    logging.basicConfig(
        level=settings.level,
        format=settings.format,
        stream=sys.stderr,
        force=True,
    )
    return logging.getLogger("pcmax")
