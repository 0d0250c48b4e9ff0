"""
Dielectric models of mirrors, substrates and the cavity filling.

All frequencies are angular frequencies in rad/s.
"""

import dataclasses
import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Union

from ..utils.exceptions import ConfigError, DomainError
from ..utils.units import EV, parse_quantity

# Drude parameters of gold (hbar*omega_p = 9.02 eV, hbar*gamma = 0.0265 eV)
GOLD_PLASMA_EV = 9.02
GOLD_DAMPING_EV = 0.0265
GLASS_EPS = 2.1
WATER_EPS = 1.77  # n = 1.33


@dataclass(frozen=True)
class LorentzMedium:
    """
    Single-resonance oscillator medium,
    eps(w) = eps_inf + 4 g^2 / (w0^2 - w^2 - i w gamma).

    g is the collective coupling; eps_inf is a g-independent background.
    """

    omega0: float
    g: float = 0.0
    gamma: float = 0.0
    eps_inf: float = 1.0

    def __post_init__(self) -> None:
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")
        if not self.g >= 0:
            raise DomainError(f"g must be >= 0, got {self.g}")
        if not self.gamma >= 0:
            raise DomainError(f"gamma must be >= 0, got {self.gamma}")
        if not self.eps_inf >= 1:
            raise DomainError(f"eps_inf must be >= 1, got {self.eps_inf}")

    @classmethod
    def from_oscillator_strength(
        cls,
        omega0: float,
        f: float,
        omega_p: float,
        gamma: float = 0.0,
        eps_inf: float = 1.0,
    ) -> "LorentzMedium":
        """
        Builds the medium from oscillator strength f and collective plasma
        frequency omega_p, using 4 g^2 = f omega_p^2.
        """
        if f < 0:
            raise DomainError(f"oscillator strength must be >= 0, got {f}")
        return cls(omega0, 0.5 * omega_p * math.sqrt(f), gamma, eps_inf)

    @property
    def strength(self) -> float:
        """4 g^2, the numerator of the resonant term."""
        return 4.0 * self.g**2

    def static_eps(self) -> float:
        """eps(i0) = eps_inf + 4 g^2 / omega0^2, independent of gamma."""
        return self.eps_inf + self.strength / self.omega0**2

    def screening_factor(self) -> float:
        """1/sqrt(eps(i0)), the static screening of a perfect-mirror cavity."""
        return 1.0 / math.sqrt(self.static_eps())

    def with_coupling(self, g: float) -> "LorentzMedium":
        return dataclasses.replace(self, g=g)


@dataclass(frozen=True)
class DrudeMetal:
    """
    Free-electron metal, eps(w) = 1 - omega_p^2 / (w^2 + i w gamma).
    """

    omega_p: float
    gamma: float

    def __post_init__(self) -> None:
        if not self.omega_p > 0:
            raise DomainError(f"omega_p must be > 0, got {self.omega_p}")
        if not self.gamma > 0:
            raise DomainError(f"gamma must be > 0, got {self.gamma}")


@dataclass(frozen=True)
class ConstantDielectric:
    eps: float

    def __post_init__(self) -> None:
        if not self.eps >= 1:
            raise DomainError(f"eps must be >= 1, got {self.eps}")


@dataclass(frozen=True)
class PerfectConductor:
    """
    Sentinel for a perfect electric conductor. It has no finite
    permittivity; reflection is handled by the fresnel module.
    """


DielectricModel = Union[
    LorentzMedium, DrudeMetal, ConstantDielectric, PerfectConductor
]

VACUUM = ConstantDielectric(1.0)


def gold() -> DrudeMetal:
    return DrudeMetal(GOLD_PLASMA_EV * EV, GOLD_DAMPING_EV * EV)


def glass() -> ConstantDielectric:
    return ConstantDielectric(GLASS_EPS)


def water() -> ConstantDielectric:
    return ConstantDielectric(WATER_EPS)


def water_with(medium: LorentzMedium) -> LorentzMedium:
    """
    Molecules dissolved in water: the water permittivity becomes the
    background of the Lorentz term.
    """
    return dataclasses.replace(medium, eps_inf=WATER_EPS)


def is_lossy(material: DielectricModel) -> bool:
    if isinstance(material, (LorentzMedium, DrudeMetal)):
        return material.gamma > 0
    return False


def has_real_pole(material: DielectricModel) -> bool:
    """True for media whose permittivity diverges somewhere on the real axis
    when undamped: a coupled Lorentz term or a Drude metal."""
    if isinstance(material, LorentzMedium):
        return material.g > 0
    return isinstance(material, DrudeMetal)


_NAMED: Dict[str, DielectricModel] = {
    "vacuum": VACUUM,
    "pec": PerfectConductor(),
    "gold": gold(),
    "glass": glass(),
    "water": water(),
}


def named_material(name: str) -> Optional[DielectricModel]:
    """Built-in materials available by name in scenario files."""
    return _NAMED.get(name.strip().lower())


def material_from_record(
    record: Mapping[str, str],
    field: str,
    context: Optional[Dict[str, float]] = None,
) -> DielectricModel:
    """
    Builds a material from a tagged config record, e.g.::

        kind = lorentz
        omega0 = 1 omegaL
        g = 0.5 omega0
        gamma = 0.05 omega0
        eps_inf = 1.77

    Frequencies take ``eV``, ``meV``, ``rad/s`` or the relative units
    ``omegaL`` / ``omega0``; ``omega0`` is resolved once the record's own
    resonance is known.

    Raises:
        ConfigError: On an unknown kind, missing field or invalid value.
    """
    kind = (record.get("kind") or "").strip().lower()
    context = dict(context or {})

    def quantity(key: str, kind_: str, default: Optional[float] = None):
        text = record.get(key)
        if text is None:
            if default is None:
                raise ConfigError(f"{field}.{key}", "missing value")
            return default
        return parse_quantity(text, kind_, f"{field}.{key}", context)

    try:
        if kind == "lorentz":
            omega0 = quantity("omega0", "frequency")
            context["omega0"] = omega0
            return LorentzMedium(
                omega0=omega0,
                g=quantity("g", "frequency", 0.0),
                gamma=quantity("gamma", "frequency", 0.0),
                eps_inf=quantity("eps_inf", "number", 1.0),
            )
        if kind == "drude":
            return DrudeMetal(
                omega_p=quantity("omega_p", "frequency"),
                gamma=quantity("gamma", "frequency"),
            )
        if kind == "constant":
            return ConstantDielectric(quantity("eps", "number"))
        if kind == "pec":
            return PerfectConductor()
    except DomainError as e:
        raise ConfigError(field, str(e))
    if named := named_material(kind):
        return named
    raise ConfigError(
        f"{field}.kind",
        f"unknown material kind '{kind}', expected lorentz, drude, "
        "constant or pec",
    )
