import logging
import os
from logging.config import fileConfig

from cuphcover.core.config import PACKAGE_DIR, settings

LOGGING_INI = os.path.join(PACKAGE_DIR, "logging.ini")


def configure_logging(level: str | None = None) -> None:
    """Load the console logging config; `level` overrides settings.LOG_LEVEL."""
    fileConfig(LOGGING_INI, disable_existing_loggers=False)
    logging.getLogger("cuphcover").setLevel(
        (level or settings.get("LOG_LEVEL", "WARNING")).upper()
    )
