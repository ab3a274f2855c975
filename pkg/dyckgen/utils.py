import logging
import logging.handlers
import os
from typing import Optional

from dyckgen.constants import LOGDIR, LOGDIR_ENV_VAR

handler = None


def build_logger(logger_name: str, logger_filename: Optional[str] = None, level: int = logging.INFO) -> logging.Logger:
    """
    Configure the root formatter once and return a named logger.

    Parameters:
    logger_name (str): Name of the logger to return (usually "dyckgen").
    logger_filename (str, optional): File name under the log directory; when given, a daily rotating
        file handler is attached to the named logger.
    level (int): Level for the returned logger.

    Returns:
    logging.Logger: The configured logger.
    """
    global handler

    formatter = logging.Formatter(
        fmt="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # Set the format of root handlers
    if not logging.getLogger().handlers:
        logging.basicConfig(level=logging.WARNING)
    logging.getLogger().handlers[0].setFormatter(formatter)

    logger = logging.getLogger(logger_name)
    logger.setLevel(level)

    # Add a file handler to the named logger; its children reach it by propagation
    if handler is None and logger_filename:
        logdir = os.environ.get(LOGDIR_ENV_VAR, LOGDIR)
        os.makedirs(logdir, exist_ok=True)
        filename = os.path.join(logdir, logger_filename)
        handler = logging.handlers.TimedRotatingFileHandler(
            filename, when='D', utc=True)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger
