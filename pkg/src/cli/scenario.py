import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..cli.scenarios import SCENARIOS, scenario_defaults
from ..dielectric.materials import (
    DielectricModel,
    LorentzMedium,
    material_from_record,
    named_material,
)
from ..fresnel.stack import MirrorStack
from ..lifshitz.config import CavityConfig, QuadratureSpec
from ..utils.exceptions import ConfigError, DomainError
from ..utils.load_config import Config
from ..utils.units import is_infinite, omega_cavity, parse_quantity

logger = logging.getLogger(__name__)

KINDS = ("dispersion", "integrand", "energy")
FORMATS = ("csv", "json")
SWEEP_VARIABLES = {"L": "length", "T": "temperature", "g": "frequency"}
OUTPUT_DIR_ENV = "CAVITY_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"


@dataclass(frozen=True)
class Sweep:
    variable: str
    values: Tuple[float, ...]
    series: Optional[str] = None
    series_values: Tuple[Optional[float], ...] = (None,)


@dataclass(frozen=True)
class DispersionGrid:
    q_max: float  # in units of pi / L
    points: int
    n_max: int


@dataclass(frozen=True)
class IntegrandGrid:
    xis: Tuple[float, ...]
    omegas: Tuple[float, ...]
    broadening: float


@dataclass(frozen=True)
class TransmissionGrid:
    omegas: Tuple[float, ...]
    min_prominence: float


@dataclass(frozen=True)
class OutputSpec:
    directory: str
    format: str


@dataclass
class Scenario:
    """
    A fully resolved scenario: cavity, sweep, tolerances and output, plus
    the resolved config it came from.
    """

    name: str
    kind: str
    cavity: CavityConfig
    quadrature: QuadratureSpec
    output: OutputSpec
    config: Config
    sweep: Optional[Sweep] = None
    dispersion: Optional[DispersionGrid] = None
    integrand: Optional[IntegrandGrid] = None
    transmission: Optional[TransmissionGrid] = None
    rho: Optional[float] = None
    assumed: List[str] = field(default_factory=list)

    @property
    def omega0(self) -> Optional[float]:
        gap = self.cavity.gap
        return gap.omega0 if isinstance(gap, LorentzMedium) else None


def _number(config: Config, section: str, key: str, cast=float):
    text = config.require(section, key)
    try:
        return cast(text)
    except ValueError:
        raise ConfigError(f"{section}.{key}", f"not a valid number: '{text}'")


def _user_materials(
    config: Config, context: Dict[str, float]
) -> Dict[str, DielectricModel]:
    materials = {}
    for section in config.sections():
        if section.startswith("materials."):
            name = section.split(".", 1)[1].strip().lower()
            materials[name] = material_from_record(
                config.items(section), section, context
            )
    return materials


def parse_stack(
    text: str,
    field_name: str,
    materials: Dict[str, DielectricModel],
) -> MirrorStack:
    """
    Parses ``gold:30nm, glass:inf`` into a mirror stack, layers listed
    from the gap outward.
    """
    layers = []
    for index, item in enumerate(part.strip() for part in text.split(",")):
        path = f"{field_name}[{index}]"
        name, sep, thickness = item.partition(":")
        if not sep:
            raise ConfigError(
                path, f"expected 'material:thickness', got '{item}'"
            )
        key = name.strip().lower()
        material = materials.get(key) or named_material(key)
        if material is None:
            raise ConfigError(path, f"unknown material '{name.strip()}'")
        if is_infinite(thickness):
            layers.append((material, float("inf")))
        else:
            d = parse_quantity(thickness, "length", path)
            if not d > 0:
                raise ConfigError(path, "thickness must be > 0")
            layers.append((material, d))
    try:
        return MirrorStack.from_layers(layers)
    except ConfigError as e:
        raise ConfigError(f"{field_name}.{e.field}", e.message)


def _sweep(config: Config, context: Dict[str, float], gap) -> Optional[Sweep]:
    if not config.has_section("sweep"):
        return None

    def grid(variable_key: str, values_key: str):
        variable = config.require("sweep", variable_key).strip()
        if variable not in SWEEP_VARIABLES:
            raise ConfigError(
                f"sweep.{variable_key}",
                f"unknown variable '{variable}', expected one of "
                f"{sorted(SWEEP_VARIABLES)}",
            )
        if variable == "g" and not isinstance(gap, LorentzMedium):
            raise ConfigError(
                f"sweep.{variable_key}", "sweeping g needs a Lorentz gap"
            )
        values = config.get_grid(
            "sweep", values_key, SWEEP_VARIABLES[variable], context
        )
        if variable == "L" and any(v <= 0 for v in values):
            raise ConfigError(f"sweep.{values_key}", "length must be > 0")
        if any(v < 0 for v in values):
            raise ConfigError(f"sweep.{values_key}", "values must be >= 0")
        return variable, tuple(values)

    variable, values = grid("variable", "values")
    if config.get_config("sweep", "series") is None:
        return Sweep(variable, values)
    series, series_values = grid("series", "series_values")
    if series == variable:
        raise ConfigError("sweep.series", "must differ from sweep.variable")
    return Sweep(variable, values, series, series_values)


def scenario_from_config(config: Config) -> Scenario:
    """
    Resolves every section of a scenario config into engine types.

    Raises:
        ConfigError: With the dotted path of the first invalid field.
    """
    name = config.require("scenario", "name").strip()
    kind = config.require("scenario", "kind").strip()
    if kind not in KINDS:
        raise ConfigError("scenario.kind", f"expected one of {list(KINDS)}")

    length = config.get_quantity("cavity", "L", "length")
    if not length > 0:
        raise ConfigError("cavity.L", "length must be > 0")
    temperature = config.get_quantity("cavity", "T", "temperature", 0.0)
    if not temperature >= 0:
        raise ConfigError("cavity.T", "temperature must be >= 0")

    context = {"omegaL": omega_cavity(length)}
    gap = material_from_record(config.items("gap"), "gap", context)
    if isinstance(gap, LorentzMedium):
        context["omega0"] = gap.omega0
    materials = _user_materials(config, context)
    top = parse_stack(config.require("top", "layers"), "top.layers", materials)
    bottom = parse_stack(
        config.require("bottom", "layers"), "bottom.layers", materials
    )
    try:
        cavity = CavityConfig(length, gap, top, bottom, temperature)
    except DomainError as e:
        raise ConfigError("gap", str(e))
    try:
        quadrature = QuadratureSpec(
            rel_tol=_number(config, "quadrature", "rel_tol"),
            max_subdivisions=_number(
                config, "quadrature", "max_subdivisions", int
            ),
            matsubara_rel_cutoff=_number(
                config, "quadrature", "matsubara_rel_cutoff"
            ),
            max_matsubara_terms=_number(
                config, "quadrature", "max_matsubara_terms", int
            ),
        )
    except DomainError as e:
        raise ConfigError("quadrature", str(e))

    fmt = (config.get_config("output", "format") or "csv").strip().lower()
    if fmt not in FORMATS:
        raise ConfigError("output.format", f"expected one of {list(FORMATS)}")
    directory = config.get_config("output", "path") or os.environ.get(
        OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR
    )

    scenario = Scenario(
        name=name,
        kind=kind,
        cavity=cavity,
        quadrature=quadrature,
        output=OutputSpec(directory, fmt),
        config=config,
        sweep=_sweep(config, context, gap),
        assumed=[
            a.strip()
            for a in (config.get_config("scenario", "assumed") or "").split(",")
            if a.strip()
        ],
    )

    if kind == "energy" and scenario.sweep is None:
        raise ConfigError("sweep", "energy scenarios need a [sweep] section")
    if config.has_section("dispersion"):
        scenario.dispersion = DispersionGrid(
            q_max=_number(config, "dispersion", "q_max"),
            points=_number(config, "dispersion", "points", int),
            n_max=_number(config, "dispersion", "n_max", int),
        )
        if scenario.dispersion.points < 1 or scenario.dispersion.n_max < 1:
            raise ConfigError("dispersion", "points and n_max must be >= 1")
    if kind == "dispersion" and not isinstance(gap, LorentzMedium):
        raise ConfigError("gap.kind", "dispersion scenarios need a Lorentz gap")
    if config.has_section("integrand"):
        scenario.integrand = IntegrandGrid(
            xis=tuple(config.get_grid("integrand", "xi", "frequency", context)),
            omegas=tuple(
                config.get_grid("integrand", "omega", "frequency", context)
            ),
            broadening=config.get_quantity(
                "integrand", "broadening", "frequency", context=context
            ),
        )
        if not scenario.integrand.broadening > 0:
            raise ConfigError("integrand.broadening", "must be > 0")
    if config.has_section("transmission"):
        scenario.transmission = TransmissionGrid(
            omegas=tuple(
                config.get_grid("transmission", "omega", "frequency", context)
            ),
            min_prominence=_number(config, "transmission", "min_prominence"),
        )
    if config.get_config("molecules", "rho") is not None:
        scenario.rho = config.get_quantity("molecules", "rho", "density")
        if not scenario.rho > 0:
            raise ConfigError("molecules.rho", "density must be > 0")

    logger.debug(f"Resolved scenario '{name}' ({kind})")
    return scenario


def load_scenario(source: str) -> Scenario:
    """
    Loads a scenario from a config file, or the built-in defaults when
    source is a scenario name.
    """
    if not os.path.exists(source) and source in SCENARIOS:
        return scenario_from_config(Config(defaults=scenario_defaults(source)))
    name = (Config(source).get_config("scenario", "name") or "custom").strip()
    if name not in SCENARIOS:
        raise ConfigError(
            "scenario.name",
            f"unknown scenario '{name}', expected one of {sorted(SCENARIOS)}",
        )
    config = Config(source, defaults=scenario_defaults(name))
    return scenario_from_config(config)
