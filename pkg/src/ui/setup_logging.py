import logging


def setup_logging(verbosity: int = 0) -> None:
    """
    Set up basic configuration for logging.

    verbosity > 0 switches to DEBUG, verbosity < 0 to WARNING.
    """
    if verbosity > 0:
        level = logging.DEBUG
    elif verbosity < 0:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )
