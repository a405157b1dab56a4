import logging.config
import os
from typing import Optional

LOGGING_CONFIG_PATH = '/pluripotential/config/logging_config_launch.ini'


def logging_handler(args, config_path_extension: Optional[str] = None):
    """
    Configures the root logger from the CLI arguments.

    Args:
        args: Parsed arguments carrying `verbose`, `quiet` and `log_file`.
        config_path_extension (Optional[str]): Logging ini path relative to the repository root.

    Returns:
        The same namespace, with `verbosity` set.
    """
    fetch_logging_config(config_path_extension or LOGGING_CONFIG_PATH)

    if args.log_file:
        file_handler = logging.FileHandler(filename=os.path.expanduser(args.log_file))
        root_logger = logging.getLogger()
        if root_logger.handlers:
            file_handler.setFormatter(root_logger.handlers[0].formatter)
        root_logger.addHandler(file_handler)

    # Set log level based on CLI
    args.verbosity = args.verbose - args.quiet
    logging.getLogger().setLevel(verbosity_to_level(args.verbosity))

    return args


def verbosity_to_level(verbosity: int) -> int:
    if verbosity >= 1:
        return logging.DEBUG
    if verbosity == -1:
        return logging.WARNING
    if verbosity <= -2:
        return logging.ERROR
    return logging.INFO


def get_base_path():
    current_directory = os.path.dirname(__file__)
    return os.path.abspath(os.path.join(current_directory, '..'))


def fetch_logging_config(config_path_extension: str):
    logging.config.fileConfig(get_base_path() + config_path_extension, disable_existing_loggers=False)
