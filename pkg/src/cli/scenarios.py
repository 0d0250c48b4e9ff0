"""
Built-in scenario defaults, one INI-shaped dictionary per figure.

A user file names a scenario in ``[scenario] name`` and overrides these
section by section. Keys listed in ``[scenario] assumed`` are values the
source figures do not give; they are reported as such in every output.
"""

from dataclasses import dataclass
from typing import Dict, Mapping

Sections = Dict[str, Dict[str, str]]

PEC_CAVITY = {"L": "100 nm", "T": "0 K"}
PEC_MIRROR = {"layers": "pec:inf"}
GOLD_MIRROR = {"layers": "gold:30nm, glass:inf"}
RESONANT_GAP = {"kind": "lorentz", "omega0": "1 omegaL", "g": "0 omega0"}
QUADRATURE = {
    "rel_tol": "1e-8",
    "max_subdivisions": "200",
    "matsubara_rel_cutoff": "1e-10",
    "max_matsubara_terms": "200000",
}
# looser settings for the Drude sweeps with many Matsubara terms
QUADRATURE_SWEEP = {
    "rel_tol": "1e-6",
    "max_subdivisions": "200",
    "matsubara_rel_cutoff": "1e-8",
    "max_matsubara_terms": "200000",
}
OUTPUT = {"format": "csv"}


@dataclass(frozen=True)
class ScenarioDefaults:
    description: str
    sections: Mapping[str, Mapping[str, str]]

    def as_dict(self) -> Sections:
        return {name: dict(values) for name, values in self.sections.items()}


def _scenario(name: str, kind: str, assumed: str = "") -> Dict[str, str]:
    return {"name": name, "kind": kind, "assumed": assumed}


SCENARIOS: Dict[str, ScenarioDefaults] = {
    "fig1b": ScenarioDefaults(
        "Cavity polariton branches for g = 0.2 omega0, omega0 = 2 omegaL",
        {
            "scenario": _scenario("fig1b", "dispersion"),
            "cavity": PEC_CAVITY,
            "gap": {**RESONANT_GAP, "omega0": "2 omegaL", "g": "0.2 omega0"},
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "dispersion": {"q_max": "4", "points": "81", "n_max": "4"},
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
    "fig1d": ScenarioDefaults(
        "Frequency integrands U_xi and U_omega of a PEC cavity",
        {
            "scenario": _scenario(
                "fig1d", "integrand", "gap.g, gap.gamma, integrand.broadening"
            ),
            "cavity": PEC_CAVITY,
            "gap": {
                **RESONANT_GAP,
                "g": "0.5 omega0",
                "gamma": "0.02 omegaL",
            },
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "integrand": {
                "xi": "linspace(0, 5, 201) omegaL",
                "omega": "linspace(0.01, 5, 500) omegaL",
                "broadening": "0.02 omegaL",
            },
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
    "fig1e": ScenarioDefaults(
        "|U(g)|/|U(0)| of a resonant PEC cavity, g from 0 to 3 omega0",
        {
            "scenario": _scenario("fig1e", "energy"),
            "cavity": PEC_CAVITY,
            "gap": RESONANT_GAP,
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "sweep": {"variable": "g", "values": "linspace(0, 3, 16) omega0"},
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
    "fig2a": ScenarioDefaults(
        "Relative shift vs g: Lifshitz, static screening and single mode",
        {
            "scenario": _scenario("fig2a", "energy"),
            "cavity": PEC_CAVITY,
            "gap": RESONANT_GAP,
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "sweep": {"variable": "g", "values": "linspace(0, 3, 20) omega0"},
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
    "fig2b": ScenarioDefaults(
        "Absolute shift vs L at T = 0: Lifshitz and single mode",
        {
            "scenario": _scenario("fig2b", "energy", "gap.g"),
            "cavity": PEC_CAVITY,
            "gap": {**RESONANT_GAP, "g": "0.5 omega0"},
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "sweep": {
                "variable": "L",
                "values": "geomspace(10, 10000, 16) nm",
            },
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
    "fig2c": ScenarioDefaults(
        "Gold mirrors on glass at 300 K with and without the medium",
        {
            "scenario": _scenario("fig2c", "energy"),
            "cavity": {"L": "100 nm", "T": "300 K"},
            "gap": {**RESONANT_GAP, "g": "1 omega0"},
            "top": GOLD_MIRROR,
            "bottom": GOLD_MIRROR,
            "sweep": {
                "variable": "L",
                "values": "geomspace(100, 4000, 12) nm",
            },
            "quadrature": QUADRATURE_SWEEP,
            "output": OUTPUT,
        },
    ),
    "fig2d": ScenarioDefaults(
        "Gold-mirror energy shift vs L at several temperatures",
        {
            "scenario": _scenario(
                "fig2d", "energy", "sweep.series_values, gap.g"
            ),
            "cavity": {"L": "100 nm", "T": "0 K"},
            "gap": {**RESONANT_GAP, "g": "1 omega0"},
            "top": GOLD_MIRROR,
            "bottom": GOLD_MIRROR,
            "sweep": {
                "variable": "L",
                "values": "geomspace(100, 4000, 8) nm",
                "series": "T",
                "series_values": "0, 77, 300 K",
            },
            "quadrature": QUADRATURE_SWEEP,
            "output": OUTPUT,
        },
    ),
    "fig3a": ScenarioDefaults(
        "Gold cavity filled with molecules in water: energy and transmission",
        {
            "scenario": _scenario(
                "fig3a", "energy", "cavity.T, gap.gamma, sweep.values"
            ),
            "cavity": {"L": "100 nm", "T": "0 K"},
            "gap": {
                **RESONANT_GAP,
                "gamma": "0.05 omega0",
                "eps_inf": "1.77",
            },
            "top": GOLD_MIRROR,
            "bottom": GOLD_MIRROR,
            "sweep": {
                "variable": "L",
                "values": "geomspace(50, 1000, 6) nm",
                "series": "g",
                "series_values": "0, 0.1, 0.5, 1 omega0",
            },
            "transmission": {
                "omega": "linspace(0.2, 2.5, 2000) omega0",
                "min_prominence": "0.05",
            },
            "quadrature": QUADRATURE_SWEEP,
            "output": OUTPUT,
        },
    ),
    "fig3b": ScenarioDefaults(
        "Energy change per molecule vs L at room temperature",
        {
            "scenario": _scenario("fig3b", "energy", "molecules.rho"),
            "cavity": {"L": "100 nm", "T": "300 K"},
            "gap": {
                **RESONANT_GAP,
                "gamma": "0.05 omega0",
                "eps_inf": "1.77",
            },
            "top": GOLD_MIRROR,
            "bottom": GOLD_MIRROR,
            "sweep": {
                "variable": "L",
                "values": "geomspace(5, 50, 6) nm",
                "series": "g",
                "series_values": "0.5, 1 omega0",
            },
            "molecules": {"rho": "1 M"},
            "quadrature": QUADRATURE_SWEEP,
            "output": OUTPUT,
        },
    ),
    "custom": ScenarioDefaults(
        "Single PEC cavity point, meant to be overridden by a config file",
        {
            "scenario": _scenario("custom", "energy"),
            "cavity": PEC_CAVITY,
            "gap": {**RESONANT_GAP, "g": "0.5 omega0"},
            "top": PEC_MIRROR,
            "bottom": PEC_MIRROR,
            "sweep": {"variable": "g", "values": "0.5 omega0"},
            "quadrature": QUADRATURE,
            "output": OUTPUT,
        },
    ),
}


def scenario_defaults(name: str) -> Sections:
    return SCENARIOS[name].as_dict()
