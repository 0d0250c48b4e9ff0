from ..cli.commands import build_parser, main
from ..cli.runner import (
    PressureResult,
    pressure_finite_difference,
    run_scenario,
    scenario_tables,
)
from ..cli.scenario import Scenario, load_scenario, scenario_from_config
from ..cli.scenarios import SCENARIOS

__all__ = [
    "PressureResult",
    "SCENARIOS",
    "Scenario",
    "build_parser",
    "load_scenario",
    "main",
    "pressure_finite_difference",
    "run_scenario",
    "scenario_from_config",
    "scenario_tables",
]
