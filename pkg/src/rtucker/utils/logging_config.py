"""
Logging configuration.
"""

import logging
import sys


def configure_logging(level: str = "INFO") -> None:
    """Configure the root logger; records go to stderr so stdout stays CSV-clean."""
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=getattr(logging, level.upper(), logging.INFO),
        stream=sys.stderr,
    )
