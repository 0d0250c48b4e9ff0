import configparser
import io
import logging
import os
from functools import lru_cache
from typing import Dict, List, Mapping, Optional

from ..utils.exceptions import ConfigError
from ..utils.units import parse_grid, parse_quantity

logger = logging.getLogger(__name__)


class Config:
    """
    A class to manage scenario settings read from an INI file.

    Built-in defaults are loaded first, the user file is layered on top
    section by section.
    """

    def __init__(
        self,
        config_file: Optional[str] = None,
        defaults: Optional[Mapping[str, Mapping[str, str]]] = None,
    ):
        """
        Initialize the Config class.
        """
        self.config = configparser.ConfigParser(interpolation=None)
        self.config.optionxform = str  # keep key case
        self._config_cache = lru_cache(maxsize=None)(self._cache_config_value)
        self.path = (
            self._get_absolute_path(config_file) if config_file else None
        )

        if defaults:
            self.config.read_dict(defaults)

        if self.path is not None:
            if not os.path.exists(self.path):
                raise ConfigError("", f"config file not found: {self.path}")
            try:
                with open(self.path, encoding="utf-8") as handle:
                    self.config.read_file(handle)
            except configparser.Error as e:
                raise ConfigError("", f"error reading config file: {e}")

    @staticmethod
    def _get_absolute_path(path: str) -> str:
        return os.path.abspath(os.path.expanduser(path))

    def _cache_config_value(self, section: str, key: str) -> Optional[str]:
        try:
            return self.config[section][key]
        except KeyError:
            logger.debug(f"Config key '{key}' not found in section '{section}'")
            return None

    def get_config(self, section: str, key: str) -> Optional[str]:
        """
        Retrieve a raw configuration value.
        """
        return self._config_cache(section, key)

    def require(self, section: str, key: str) -> str:
        """
        Retrieve a configuration value and raise if it is missing.
        """
        if value := self.get_config(section, key):
            return value
        raise ConfigError(f"{section}.{key}", "missing value")

    def get_quantity(
        self,
        section: str,
        key: str,
        kind: str,
        default: Optional[float] = None,
        context: Optional[Dict[str, float]] = None,
    ) -> float:
        """
        Retrieve a unit-suffixed value converted to SI units.
        """
        value = self.get_config(section, key)
        if value is None:
            if default is None:
                raise ConfigError(f"{section}.{key}", "missing value")
            return default
        return parse_quantity(value, kind, f"{section}.{key}", context)

    def get_grid(
        self,
        section: str,
        key: str,
        kind: str,
        context: Optional[Dict[str, float]] = None,
    ) -> List[float]:
        """
        Retrieve a sweep grid converted to SI units.
        """
        return parse_grid(
            self.require(section, key), kind, f"{section}.{key}", context
        )

    def set(self, section: str, key: str, value: str) -> None:
        """
        Override a value, e.g. from a command line flag.
        """
        if not self.config.has_section(section):
            self.config.add_section(section)
        self.config.set(section, key, value)
        self._config_cache.cache_clear()

    def has_section(self, section: str) -> bool:
        return self.config.has_section(section)

    def sections(self) -> List[str]:
        return self.config.sections()

    def items(self, section: str) -> Dict[str, str]:
        if not self.config.has_section(section):
            return {}
        return dict(self.config.items(section))

    def to_ini(self) -> str:
        """
        The resolved configuration as INI text.
        """
        buffer = io.StringIO()
        self.config.write(buffer)
        return buffer.getvalue()
