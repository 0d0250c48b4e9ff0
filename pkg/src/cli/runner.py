"""
Turns resolved scenarios into output tables.

Sweep points run on a thread pool; rows are always emitted in grid order.
"""

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.constants import k

from .. import __version__
from ..cli.scenario import Scenario, load_scenario, scenario_from_config
from ..cli.tables import Table, write_table
from ..dielectric.materials import LorentzMedium
from ..fresnel.transmission import transmission_maxima, transmission_spectrum
from ..hopfield.polaritons import (
    CouplingSpec,
    cavity_mode,
    cavity_polaritons,
    polariton_gap,
    single_mode_relative,
    single_mode_shift,
)
from ..lifshitz.config import CavityConfig, EnergyResult, QuadratureSpec
from ..lifshitz.energy import energy, per_molecule
from ..lifshitz.integrand import integrand_omega, integrand_samples
from ..ssa.screening import (
    SsaInput,
    ssa_energy,
    ssa_overlay,
    ssa_relative_shift,
)
from ..utils.exceptions import ConvergenceError, DomainError
from ..utils.handle_exceptions import EXIT_CONVERGENCE_ERROR, EXIT_OK
from ..utils.units import omega_cavity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointEnergy:
    """Energy of one sweep point; warning is set when it did not converge."""

    u_per_area: float
    rel_tol_achieved: float
    matsubara_terms_used: Optional[int]
    warning: str = ""


@dataclass(frozen=True)
class PressureResult:
    pressure: float
    extrapolated: float
    error_estimate: float


def _energy_or_partial(cfg: CavityConfig, spec: QuadratureSpec) -> PointEnergy:
    try:
        result: EnergyResult = energy(cfg, spec, workers=1)
    except ConvergenceError as e:
        logger.warning(f"Point L={cfg.L:.4e} m, T={cfg.T} K: {e}")
        return PointEnergy(
            e.partial_value, e.rel_tol_achieved, e.terms_used, str(e)
        )
    return PointEnergy(
        result.u_per_area, result.rel_tol_achieved, result.matsubara_terms_used
    )


def _energies(
    cfgs: List[CavityConfig], spec: QuadratureSpec, workers: Optional[int]
) -> Dict[CavityConfig, PointEnergy]:
    """Energies of the distinct configs, computed once each."""
    unique = list(dict.fromkeys(cfgs))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(
            executor.map(lambda cfg: _energy_or_partial(cfg, spec), unique)
        )
    return dict(zip(unique, results))


def pressure_finite_difference(
    cfg: CavityConfig,
    dL: float,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> PressureResult:
    """
    Casimir pressure -dU/dL from central differences with steps dL and
    dL/2, combined by Richardson extrapolation.

    Returns:
        PressureResult: The dL/2 central difference, the extrapolated value
            and |P(dL/2) - P(dL)| / 3 as its error estimate.
    """
    if not 0 < dL < cfg.L:
        raise DomainError(f"dL must lie in (0, L), got {dL}")
    lengths = [cfg.L - dL, cfg.L - dL / 2, cfg.L + dL / 2, cfg.L + dL]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        u = list(
            executor.map(
                lambda length: energy(cfg.with_length(length), spec).u_per_area,
                lengths,
            )
        )
    coarse = -(u[3] - u[0]) / (2 * dL)
    fine = -(u[2] - u[1]) / dL
    return PressureResult(fine, (4 * fine - coarse) / 3, abs(fine - coarse) / 3)


def _sweep_label(variable: str) -> str:
    return {"L": "L_m", "T": "T_K", "g": "g_over_omega0"}[variable]


def _apply(cfg: CavityConfig, variable: Optional[str], value) -> CavityConfig:
    if variable is None:
        return cfg
    if variable == "L":
        return cfg.with_length(value)
    if variable == "T":
        return cfg.with_temperature(value)
    return cfg.with_coupling(value)


def energy_table(scenario: Scenario, workers: Optional[int] = None) -> Table:
    """
    Coupled and uncoupled energies over the sweep grid, with the static
    screening and single-mode predictions alongside.
    """
    sweep = scenario.sweep
    base = scenario.cavity
    gap = base.gap
    lorentz = isinstance(gap, LorentzMedium)
    points: List[Tuple[Optional[float], float]] = [
        (s, v) for s in sweep.series_values for v in sweep.values
    ]
    coupled_cfgs, uncoupled_cfgs = [], []
    for series_value, value in points:
        cfg = _apply(base, sweep.series, series_value)
        cfg = _apply(cfg, sweep.variable, value)
        coupled_cfgs.append(cfg)
        uncoupled_cfgs.append(cfg.with_coupling(0.0) if lorentz else cfg)
    logger.info(
        f"Scenario '{scenario.name}': {len(points)} sweep points, "
        f"{len(set(coupled_cfgs + uncoupled_cfgs))} energies"
    )
    results = _energies(
        coupled_cfgs + uncoupled_cfgs, scenario.quadrature, workers
    )

    rows = []
    for (series_value, value), cfg, cfg0 in zip(
        points, coupled_cfgs, uncoupled_cfgs
    ):
        coupled, uncoupled = results[cfg], results[cfg0]
        row: Dict[str, object] = {}
        if sweep.series is not None:
            row[_sweep_label(sweep.series)] = _scaled(
                sweep.series, series_value, gap
            )
        row[_sweep_label(sweep.variable)] = _scaled(sweep.variable, value, gap)
        delta = coupled.u_per_area - uncoupled.u_per_area
        ratio = (
            coupled.u_per_area / uncoupled.u_per_area
            if uncoupled.u_per_area != 0
            else math.nan
        )
        row.update(
            {
                "U_uncoupled": uncoupled.u_per_area,
                "U_coupled": coupled.u_per_area,
                "delta_U": delta,
                "U_over_U0": ratio,
                "relative_shift": 1.0 - ratio,
            }
        )
        row.update(_predictions(cfg, uncoupled.u_per_area, delta, scenario.rho))
        row["rel_tol_achieved"] = (
            coupled.rel_tol_achieved + uncoupled.rel_tol_achieved
            if cfg != cfg0
            else coupled.rel_tol_achieved
        )
        row["matsubara_terms"] = coupled.matsubara_terms_used
        row["warning"] = "; ".join(
            w for w in dict.fromkeys([coupled.warning, uncoupled.warning]) if w
        )
        rows.append(row)
    return Table("energy", pd.DataFrame(rows))


def _scaled(variable: str, value: float, gap) -> float:
    if variable == "g":
        return value / gap.omega0
    return value


def _predictions(
    cfg: CavityConfig, u_uncoupled: float, delta: float, rho: Optional[float]
) -> Dict[str, object]:
    """Closed-form comparison columns of one sweep point."""
    gap = cfg.gap
    columns: Dict[str, object] = {}
    if isinstance(gap, LorentzMedium):
        columns["ssa_relative_shift"] = ssa_relative_shift(
            gap.omega0, gap.g, gap.eps_inf
        )
        if cfg.is_perfect and cfg.T == 0 and gap.eps_inf == 1:
            columns["U_ssa"] = ssa_energy(SsaInput(cfg.L, gap.omega0, gap.g))
            columns["ssa_kind"] = "closed form"
        else:
            columns["U_ssa"] = ssa_overlay(u_uncoupled, gap)
            columns["ssa_kind"] = "overlay U(g=0)*sqrt(eps_inf/eps(i0))"
        spec = CouplingSpec(gap.omega0, gap.g, cfg.omega_L)
        columns["single_mode_shift_J"] = single_mode_shift(spec)
        columns["single_mode_relative"] = single_mode_relative(spec)
    if rho is not None:
        columns["per_molecule_J"] = per_molecule(delta, rho, cfg.L)
        columns["thermal_energy_J"] = k * cfg.T
    return columns


def dispersion_table(scenario: Scenario) -> Table:
    """Cavity polariton branches (q, n, omega_minus, omega_plus)."""
    cavity = scenario.cavity
    grid = scenario.dispersion
    gap = cavity.gap
    spec = CouplingSpec(gap.omega0, gap.g, cavity.omega_L)
    q = np.linspace(0.0, grid.q_max * np.pi / cavity.L, grid.points)
    frames = []
    for n in range(1, grid.n_max + 1):
        pair = cavity_polaritons(q, n, cavity.L, spec)
        frames.append(
            pd.DataFrame(
                {
                    "q": q,
                    "q_L_over_pi": q * cavity.L / np.pi,
                    "n": n,
                    "omega_mode": cavity_mode(q, n, cavity.L),
                    "omega_minus": np.atleast_1d(pair.omega_minus),
                    "omega_plus": np.atleast_1d(pair.omega_plus),
                }
            )
        )
    frame = pd.concat(frames, ignore_index=True)
    for column in ("omega_mode", "omega_minus", "omega_plus"):
        frame[f"{column}_over_omegaL"] = frame[column] / cavity.omega_L
    metadata = {
        "omega0": gap.omega0,
        "gap_upper_edge": gap.omega0 + polariton_gap(spec),
    }
    return Table("dispersion", frame, metadata)


def integrand_tables(
    scenario: Scenario, workers: Optional[int] = None
) -> List[Table]:
    """U_xi on the imaginary axis and the U_omega diagnostic."""
    cavity = scenario.cavity.with_temperature(0.0)
    grid = scenario.integrand
    omega_L = cavity.omega_L
    inner = scenario.quadrature.inner_rel_tol
    coupled = integrand_samples(cavity, grid.xis, inner, workers)
    xi_frame = pd.DataFrame(coupled, columns=["xi_rad_per_s", "U_xi"])
    if isinstance(cavity.gap, LorentzMedium):
        uncoupled = integrand_samples(
            cavity.with_coupling(0.0), grid.xis, inner, workers
        )
        xi_frame["U_xi_uncoupled"] = [u for _, u in uncoupled]
    xi_frame.insert(1, "xi_over_omegaL", xi_frame["xi_rad_per_s"] / omega_L)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        values = list(
            executor.map(
                lambda w: integrand_omega(cavity, w, grid.broadening),
                grid.omegas,
            )
        )
    omega_frame = pd.DataFrame(
        {
            "omega_rad_per_s": grid.omegas,
            "omega_over_omegaL": np.asarray(grid.omegas) / omega_L,
            "U_omega": values,
        }
    )
    return [
        Table("xi", xi_frame),
        Table("omega", omega_frame, {"broadening": grid.broadening}),
    ]


def transmission_tables(scenario: Scenario) -> List[Table]:
    """Normal-incidence spectra per coupling and their maxima."""
    cavity = scenario.cavity
    grid = scenario.transmission
    gap = cavity.gap
    if scenario.sweep is not None and scenario.sweep.series == "g":
        couplings = list(scenario.sweep.series_values)
    else:
        couplings = [gap.g]
    omegas = np.asarray(grid.omegas)
    spectra, peaks = [], []
    for g in couplings:
        medium = gap.with_coupling(g)
        spectrum = transmission_spectrum(
            cavity.top, medium, cavity.bottom, omegas, cavity.L
        )
        spectra.append(
            pd.DataFrame(
                {
                    "g_over_omega0": g / gap.omega0,
                    "omega_rad_per_s": omegas,
                    "omega_over_omega0": omegas / gap.omega0,
                    "T": spectrum,
                }
            )
        )
        maxima = transmission_maxima(omegas, spectrum, grid.min_prominence)
        peaks += [
            {
                "g_over_omega0": g / gap.omega0,
                "peak": index,
                "omega_rad_per_s": omega,
                "omega_over_omega0": omega / gap.omega0,
            }
            for index, omega in enumerate(maxima)
        ]
    return [
        Table("transmission", pd.concat(spectra, ignore_index=True)),
        Table(
            "transmission_peaks",
            pd.DataFrame(
                peaks,
                columns=[
                    "g_over_omega0",
                    "peak",
                    "omega_rad_per_s",
                    "omega_over_omega0",
                ],
            ),
        ),
    ]


def scenario_tables(
    scenario: Scenario, workers: Optional[int] = None
) -> List[Table]:
    if scenario.kind == "dispersion":
        tables = [dispersion_table(scenario)]
    elif scenario.kind == "integrand":
        tables = integrand_tables(scenario, workers)
    else:
        tables = [energy_table(scenario, workers)]
    if scenario.transmission is not None and isinstance(
        scenario.cavity.gap, LorentzMedium
    ):
        tables += transmission_tables(scenario)
    return tables


def metadata(scenario: Scenario, tables: List[Table]) -> Dict[str, object]:
    achieved = [
        value
        for table in tables
        if "rel_tol_achieved" in table.frame
        for value in table.frame["rel_tol_achieved"]
    ]
    return {
        "tool": "cavity-lifshitz",
        "version": __version__,
        "scenario": scenario.name,
        "kind": scenario.kind,
        "rel_tol_requested": scenario.quadrature.rel_tol,
        "rel_tol_achieved_max": max(achieved) if achieved else None,
        "omegaL": omega_cavity(scenario.cavity.L),
        "assumed": ", ".join(scenario.assumed) or "none",
    }


def run_scenario(
    source: str,
    rel_tol: Optional[float] = None,
    fmt: Optional[str] = None,
    output: Optional[str] = None,
    workers: Optional[int] = None,
) -> int:
    """
    Runs a scenario file or built-in scenario and writes its tables plus a
    ``<name>.resolved.ini`` sidecar that reproduces the run.

    Returns:
        int: 0 on success, 2 if some point did not converge. Partial
            values are still written, flagged in the warning column.
    """
    scenario = load_scenario(source)
    if rel_tol is not None or fmt is not None or output is not None:
        config = scenario.config
        if rel_tol is not None:
            config.set("quadrature", "rel_tol", repr(float(rel_tol)))
        if fmt is not None:
            config.set("output", "format", fmt)
        if output is not None:
            config.set("output", "path", output)
        scenario = scenario_from_config(config)

    logger.info(f"Running scenario '{scenario.name}'")
    tables = scenario_tables(scenario, workers)
    config_text = scenario.config.to_ini()
    header = metadata(scenario, tables)
    for table in tables:
        write_table(
            table,
            scenario.output.directory,
            scenario.name,
            scenario.output.format,
            header,
            config_text,
        )
    sidecar = os.path.join(
        scenario.output.directory, f"{scenario.name}.resolved.ini"
    )
    with open(sidecar, "w", encoding="utf-8") as handle:
        handle.write(config_text)

    warnings = [w for table in tables for w in table.warnings]
    if warnings:
        logger.warning(
            f"{len(warnings)} points did not converge; partial values written"
        )
        return EXIT_CONVERGENCE_ERROR
    return EXIT_OK
