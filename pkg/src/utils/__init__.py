from ..utils.exceptions import (
    CavityError,
    ConfigError,
    ConvergenceError,
    DomainError,
    SpecialCaseError,
)
from ..utils.handle_exceptions import (
    EXIT_CONFIG_ERROR,
    EXIT_CONVERGENCE_ERROR,
    EXIT_OK,
    handle_exceptions,
)
from ..utils.load_config import Config
from ..utils.units import EV, omega_cavity, parse_grid, parse_quantity

__all__ = [
    "CavityError",
    "Config",
    "ConfigError",
    "ConvergenceError",
    "DomainError",
    "EV",
    "EXIT_CONFIG_ERROR",
    "EXIT_CONVERGENCE_ERROR",
    "EXIT_OK",
    "SpecialCaseError",
    "handle_exceptions",
    "omega_cavity",
    "parse_grid",
    "parse_quantity",
]
