"""
Unit-suffixed quantities used in scenario files.

Everything is converted to SI at this boundary: rad/s, m, K, m^-3.
"""

import re
from typing import Dict, List, Optional

import numpy as np
from scipy.constants import N_A, c, e, hbar, pi

from ..utils.exceptions import ConfigError

EV = e / hbar  # rad/s per eV

LENGTH_UNITS: Dict[str, float] = {
    "m": 1.0,
    "mm": 1e-3,
    "um": 1e-6,
    "µm": 1e-6,
    "nm": 1e-9,
}
FREQUENCY_UNITS: Dict[str, float] = {
    "rad/s": 1.0,
    "eV": EV,
    "meV": 1e-3 * EV,
}
TEMPERATURE_UNITS: Dict[str, float] = {"K": 1.0}
DENSITY_UNITS: Dict[str, float] = {
    "m^-3": 1.0,
    "nm^-3": 1e27,
    "M": 1e3 * N_A,
    "mM": N_A,
}
RELATIVE_FREQUENCY_UNITS = ("omega0", "omegaL")

KINDS = ("length", "frequency", "temperature", "density", "number")

_QUANTITY = re.compile(
    r"^\s*(?P<value>[-+]?(?:inf|\d+\.?\d*(?:[eE][-+]?\d+)?|\.\d+"
    r"(?:[eE][-+]?\d+)?))\s*(?P<unit>\S*)\s*$"
)
_SPACED = re.compile(
    r"^\s*(?P<func>linspace|geomspace)\s*\((?P<args>[^)]*)\)\s*(?P<unit>\S*)\s*$"
)


def omega_cavity(length: float) -> float:
    """Fundamental mode pi*c/L of a perfect-mirror cavity in rad/s."""
    return pi * c / length


def _scale(
    unit: str, kind: str, field: str, context: Optional[Dict[str, float]]
) -> float:
    if kind == "number":
        if unit:
            raise ConfigError(field, f"unexpected unit '{unit}'")
        return 1.0
    if kind == "frequency" and unit in RELATIVE_FREQUENCY_UNITS:
        if not context or unit not in context:
            raise ConfigError(
                field, f"unit '{unit}' cannot be resolved at this point"
            )
        return context[unit]
    table = {
        "length": LENGTH_UNITS,
        "frequency": FREQUENCY_UNITS,
        "temperature": TEMPERATURE_UNITS,
        "density": DENSITY_UNITS,
    }[kind]
    if not unit and kind == "temperature":
        # a bare temperature is in kelvin
        return TEMPERATURE_UNITS["K"]
    if not unit:
        raise ConfigError(
            field, f"missing unit, expected one of {sorted(table)}"
        )
    if unit not in table:
        raise ConfigError(
            field, f"unknown {kind} unit '{unit}', expected {sorted(table)}"
        )
    return table[unit]


def parse_quantity(
    text: str,
    kind: str,
    field: str,
    context: Optional[Dict[str, float]] = None,
) -> float:
    """
    Parses a string like ``100 nm`` or ``0.5 omega0`` into an SI float.

    Args:
        text (str): The quantity as written in the config.
        kind (str): One of ``length``, ``frequency``, ``temperature``,
            ``density`` or ``number``.
        field (str): Field path reported in errors.
        context (dict, optional): Values of the relative units
            ``omega0`` / ``omegaL`` in rad/s.

    Returns:
        float: The value in SI units.

    Raises:
        ConfigError: If the text cannot be parsed.
    """
    match = _QUANTITY.match(text or "")
    if match is None:
        raise ConfigError(field, f"cannot parse {kind} '{text}'")
    value = float(match.group("value"))
    return value * _scale(match.group("unit"), kind, field, context)


def parse_grid(
    text: str,
    kind: str,
    field: str,
    context: Optional[Dict[str, float]] = None,
) -> List[float]:
    """
    Parses a sweep grid.

    Accepted forms are ``linspace(a, b, n) unit``, ``geomspace(a, b, n) unit``
    and comma separated lists where a trailing unit applies to bare numbers,
    e.g. ``0, 0.1, 0.5, 1 omega0``.
    """
    if match := _SPACED.match(text or ""):
        args = [a.strip() for a in match.group("args").split(",")]
        if len(args) != 3:
            raise ConfigError(field, f"{match.group('func')} takes 3 arguments")
        try:
            start, stop, count = float(args[0]), float(args[1]), int(args[2])
        except ValueError:
            raise ConfigError(field, f"invalid grid arguments in '{text}'")
        if count < 1:
            raise ConfigError(field, "grid must be non-empty")
        scale = _scale(match.group("unit"), kind, field, context)
        if match.group("func") == "geomspace":
            if start <= 0 or stop <= 0:
                raise ConfigError(field, "geomspace bounds must be > 0")
            values = np.geomspace(start, stop, count)
        else:
            values = np.linspace(start, stop, count)
        return [float(v) * scale for v in values]

    items = [item.strip() for item in (text or "").split(",") if item.strip()]
    if not items:
        raise ConfigError(field, "grid must be non-empty")
    trailing = _QUANTITY.match(items[-1])
    shared_unit = trailing.group("unit") if trailing else ""
    values = []
    for item in items:
        match = _QUANTITY.match(item)
        if match is None:
            raise ConfigError(field, f"cannot parse grid value '{item}'")
        unit = match.group("unit") or shared_unit
        values.append(
            float(match.group("value")) * _scale(unit, kind, field, context)
        )
    return values


def is_infinite(text: str) -> bool:
    """True for the half-space marker ``inf``."""
    return text.strip().lower() in ("inf", "infinity")
