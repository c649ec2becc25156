# -*- coding: utf-8 -*-

"""
Logger initialization
"""

import logging
import os
from typing import Optional


def console_logger(name: Optional[str], level: Optional[int | str] = None) -> logging.Logger:
    """
    Named console logger with the tab separated format.

    :param name: Logger name (module name by default).
    :param level: Logging level, falls back to NMCG_LOG_LEVEL or INFO.
    :return: Logger instance
    """
    if level is None:
        level = os.environ.get("NMCG_LOG_LEVEL", "INFO")
    if isinstance(level, str):
        level = level.upper()
    logger = logging.getLogger(name or __name__)
    logger.setLevel(level)
    if not any(getattr(h, "_nmcg_console", False) for h in logger.handlers):
        console_handler = logging.StreamHandler()
        console_handler._nmcg_console = True
        formatter = logging.Formatter("%(asctime)s\t%(levelname)s\t%(message)s")
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
    for handler in logger.handlers:
        handler.setLevel(level)
    return logger
