import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler

import yaml

# Constants for log configuration
LOG_DIR = 'logs'
LOG_FILE = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
MAX_LOG_SIZE = 5 * 1024 * 1024  # 5 MB
BACKUP_COUNT = 3  # Number of backup log files to keep
PARAMS_FILE = 'params.yaml'

# Construct log file path
root_dir = os.path.dirname(os.path.abspath(os.path.join(os.path.dirname(__file__), '../')))
log_dir_path = os.path.join(root_dir, LOG_DIR)
os.makedirs(log_dir_path, exist_ok=True)
log_file_path = os.path.join(log_dir_path, LOG_FILE)

_HANDLER_TAG = '_phin_handler'


def _levels() -> tuple:
    """Read console/file levels from the ``logging`` section of params.yaml."""
    console, file_level = 'WARNING', 'INFO'
    path = os.path.join(root_dir, PARAMS_FILE)
    try:
        with open(path, 'r') as file:
            section = (yaml.safe_load(file) or {}).get('logging', {}) or {}
        console = section.get('console_level', console)
        file_level = section.get('file_level', file_level)
    except (OSError, yaml.YAMLError, AttributeError):
        pass
    return console, file_level


def configure_logger():
    """
    Configures logging with a rotating file handler and a console handler.

    The console handler writes to stderr so that command reports on stdout
    stay machine readable.
    """
    logger = logging.getLogger()
    if any(getattr(h, _HANDLER_TAG, False) for h in logger.handlers):
        return
    logger.setLevel(logging.DEBUG)
    console_level, file_level = _levels()

    # Define formatter
    formatter = logging.Formatter("[ %(asctime)s ] %(name)s - %(levelname)s - %(message)s")

    # File handler with rotation
    file_handler = RotatingFileHandler(log_file_path, maxBytes=MAX_LOG_SIZE, backupCount=BACKUP_COUNT, encoding="utf-8")
    file_handler.setFormatter(formatter)
    file_handler.setLevel(file_level)

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level)

    for handler in (file_handler, console_handler):
        setattr(handler, _HANDLER_TAG, True)
        logger.addHandler(handler)


# Configure the logger
configure_logger()
