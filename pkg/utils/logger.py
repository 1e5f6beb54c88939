import logging

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbosity: int = 0) -> None:
    """
    Install one stream handler on the root logger.

    Verbosity 0 shows warnings, 1 adds info and 2 or more adds debug output.
    Calling it again replaces the handler instead of stacking another one.
    """
    level = _LEVELS.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
