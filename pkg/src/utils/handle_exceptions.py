import functools
import logging
import sys
import traceback

from ..utils.exceptions import CavityError, ConfigError, ConvergenceError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_CONVERGENCE_ERROR = 2


def handle_exceptions(func):
    """
    Decorator for CLI commands that turns engine exceptions into exit codes.
    Logs the exception and returns the exit code instead of raising.

    :param func: The command to decorate, returning an exit code.
    :return: Wrapped command with exception handling.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            result = func(*args, **kwargs)
        except ConfigError as e:
            logger.error(f"Configuration error in {func.__name__}: {e}")
            return EXIT_CONFIG_ERROR
        except ConvergenceError as e:
            logger.error(f"Convergence failure in {func.__name__}: {e}")
            return EXIT_CONVERGENCE_ERROR
        except CavityError as e:
            logger.exception(f"Exception occurred in {func.__name__}: {e}")
            _, err, _ = sys.exc_info()
            if err is not None:
                logger.debug(traceback.format_tb(err.__traceback__)[-1])
            return EXIT_CONFIG_ERROR
        except OSError as e:
            logger.error(f"I/O error in {func.__name__}: {e}")
            return EXIT_CONFIG_ERROR
        else:
            return EXIT_OK if result is None else result

    return wrapper
