"""
Casimir-Lifshitz energy of a planar cavity.

Zero temperature integrates U_xi over the imaginary axis, finite
temperature sums it over the Matsubara frequencies. Frequency panels and
Matsubara terms are evaluated on a thread pool and always accumulated in
index order, so results do not depend on the number of workers.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from scipy.constants import hbar, k, pi
from scipy.integrate import quad

from ..lifshitz.config import (
    CavityConfig,
    EnergyDifference,
    EnergyResult,
    QuadratureSpec,
)
from ..lifshitz.integrand import (
    PREFACTOR,
    integrand_samples,
    q_integral,
    static_q_integral,
)
from ..utils.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

# fixed panels of the map xi = omega_ref t / (1 - t)
PANELS = (0.0, 0.125, 0.25, 0.5, 0.75, 1.0)
# probe points, in units of omega_ref, used to set the absolute tolerance
PROBES = (0.0, 0.1, 1.0)
MATSUBARA_BATCH = 64
MATSUBARA_QUIET_TERMS = 5


def matsubara_frequency(j: int, T: float) -> float:
    """xi_j = 2 pi j k_B T / hbar."""
    if j < 0 or T < 0:
        raise DomainError("j and T must be >= 0")
    return 2 * pi * j * k * T / hbar


def _xi_integral(
    cfg: CavityConfig,
    spec: QuadratureSpec,
    xi_max: float = math.inf,
    workers: Optional[int] = None,
) -> Tuple[float, float]:
    """
    int_0^xi_max U_xi dxi with its absolute error estimate.
    """
    omega_ref = cfg.reference_frequency()
    inner = spec.inner_rel_tol
    t_max = 1.0 if math.isinf(xi_max) else xi_max / (omega_ref + xi_max)

    def integrand(t: float) -> float:
        if t >= 1.0:
            return 0.0
        xi = omega_ref * t / (1.0 - t)
        jacobian = omega_ref / (1.0 - t) ** 2
        return PREFACTOR * q_integral(cfg, xi, inner) * jacobian

    scale = omega_ref * max(
        abs(PREFACTOR * q_integral(cfg, p * omega_ref, inner)) for p in PROBES
    )
    if scale == 0:
        return 0.0, 0.0

    bounds = [
        (lower, min(upper, t_max))
        for lower, upper in zip(PANELS, PANELS[1:])
        if lower < t_max
    ]

    def panel(bound: Tuple[float, float], epsabs: float) -> Tuple[float, float]:
        result = quad(
            integrand,
            bound[0],
            bound[1],
            epsabs=epsabs,
            epsrel=spec.rel_tol / 2,
            limit=spec.max_subdivisions,
            full_output=1,
        )
        if len(result) > 3:
            logger.debug(f"Frequency panel {bound}: {result[3]}")
        logger.debug(
            f"Frequency panel {bound}: {result[2]['last']} subdivisions"
        )
        return result[0], result[1]

    def integrate(magnitude: float) -> Tuple[float, float]:
        epsabs = spec.rel_tol * magnitude * 1e-2 / len(bounds)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(
                executor.map(lambda bound: panel(bound, epsabs), bounds)
            )
        value, error = 0.0, 0.0
        for panel_value, panel_error in results:
            value += panel_value
            error += panel_error
        return value, error

    value, error = integrate(scale)
    # the probe scale overestimates integrands concentrated far below omega_ref
    if value != 0 and error > spec.rel_tol * abs(value):
        logger.debug(
            f"Refining frequency integral at L={cfg.L:.4e} m: "
            f"rel. error {error / abs(value):.1e}"
        )
        value, error = integrate(abs(value))
    return value, error


def _achieved(value: float, error: float) -> float:
    if value == 0:
        return 0.0 if error == 0 else math.inf
    return error / abs(value)


def casimir_energy_T0(
    cfg: CavityConfig,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
    sample_xis: Optional[Sequence[float]] = None,
) -> EnergyResult:
    """
    Zero-temperature Casimir-Lifshitz energy per area,
    (hbar / 4 pi^2) int q dq int dxi sum_pol ln(1 - r_top r_bottom e^{-2 k_z L}).

    Args:
        cfg (CavityConfig): Cavity with T = 0.
        spec (QuadratureSpec): Tolerances.
        workers (int, optional): Thread count for the frequency panels.
        sample_xis (sequence, optional): Frequencies at which U_xi is
            tabulated into the result.

    Returns:
        EnergyResult: Energy in J/m^2.

    Raises:
        ConvergenceError: If the requested tolerance is not reached.
    """
    if cfg.T != 0:
        raise DomainError("casimir_energy_T0 needs T = 0")
    value, error = _xi_integral(cfg, spec, workers=workers)
    achieved = _achieved(value, error)
    logger.debug(
        f"T=0 energy at L={cfg.L:.4e} m: {value:.10e} J/m^2 "
        f"(rel. error {achieved:.1e})"
    )
    if achieved > spec.rel_tol:
        raise ConvergenceError(
            "frequency integral did not converge", value, achieved
        )
    samples = (
        integrand_samples(cfg, sample_xis, spec.inner_rel_tol, workers)
        if sample_xis is not None
        else None
    )
    return EnergyResult(value, achieved, None, samples)


def classical_limit(
    cfg: CavityConfig, spec: QuadratureSpec = QuadratureSpec()
) -> float:
    """
    The j = 0 Matsubara term alone, (k_B T / 4 pi) I(0), which dominates
    at high temperature or large L.
    """
    if not cfg.T > 0:
        raise DomainError("the classical limit needs T > 0")
    static = static_q_integral(cfg, spec.inner_rel_tol)
    return k * cfg.T / (2 * pi) * 0.5 * static


def free_energy_T(
    cfg: CavityConfig,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> EnergyResult:
    """
    Free energy per area at T > 0 from the Matsubara sum,
    (k_B T / 2 pi) sum'_j I(xi_j), the j = 0 term halved.

    The sum stops once MATSUBARA_QUIET_TERMS consecutive terms fall below
    matsubara_rel_cutoff relative to the running sum and the geometric tail
    bound is below half the tolerance.

    Raises:
        ConvergenceError: If max_matsubara_terms is reached first.
    """
    if not cfg.T > 0:
        raise DomainError("free_energy_T needs T > 0")
    inner = spec.inner_rel_tol
    prefactor = k * cfg.T / (2 * pi)

    def term(j: int) -> float:
        return q_integral(cfg, matsubara_frequency(j, cfg.T), inner)

    total = 0.5 * static_q_integral(cfg, inner)
    previous = abs(total)
    quiet = 0
    tail = math.inf
    j = 1
    with ThreadPoolExecutor(max_workers=workers) as executor:
        while j <= spec.max_matsubara_terms:
            batch = range(
                j, min(j + MATSUBARA_BATCH, spec.max_matsubara_terms + 1)
            )
            for index, value in zip(batch, executor.map(term, batch)):
                total += value
                current = abs(value)
                if current <= spec.matsubara_rel_cutoff * abs(total):
                    quiet += 1
                else:
                    quiet = 0
                ratio = current / previous if previous > 0 else 0.0
                tail = (
                    current * ratio / (1.0 - ratio) if ratio < 1 else math.inf
                )
                previous = current
                j = index + 1
                if (
                    quiet >= MATSUBARA_QUIET_TERMS
                    and tail <= 0.5 * spec.rel_tol * abs(total)
                ):
                    achieved = _achieved(total, tail) + inner
                    logger.debug(
                        f"Matsubara sum at T={cfg.T} K, L={cfg.L:.4e} m: "
                        f"{index + 1} terms"
                    )
                    return EnergyResult(prefactor * total, achieved, index + 1)

    achieved = _achieved(total, tail)
    raise ConvergenceError(
        "Matsubara sum did not converge",
        prefactor * total,
        achieved,
        spec.max_matsubara_terms + 1,
    )


def energy(
    cfg: CavityConfig,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> EnergyResult:
    """Zero-temperature energy for T = 0, free energy otherwise."""
    if cfg.T == 0:
        return casimir_energy_T0(cfg, spec, workers)
    return free_energy_T(cfg, spec, workers)


def delta_U(
    cfg: CavityConfig,
    g_on: float,
    g_off: float = 0.0,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> EnergyDifference:
    """
    U(g_on) - U(g_off) for the same cavity, the gap coupling being the only
    difference.
    """
    uncoupled = energy(cfg.with_coupling(g_off), spec, workers)
    if g_on == g_off:
        return EnergyDifference(0.0, uncoupled, uncoupled)
    coupled = energy(cfg.with_coupling(g_on), spec, workers)
    return EnergyDifference(
        coupled.u_per_area - uncoupled.u_per_area, coupled, uncoupled
    )


def per_molecule(delta_u: float, rho: float, L: float) -> float:
    """Energy per molecule, delta_u / (rho L), in J."""
    if not rho > 0:
        raise DomainError(f"rho must be > 0, got {rho}")
    if not L > 0:
        raise DomainError(f"L must be > 0, got {L}")
    return delta_u / (rho * L)


def low_frequency_weight(
    cfg: CavityConfig,
    xi_cut: float,
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> float:
    """
    Fraction of the zero-temperature energy coming from imaginary
    frequencies below xi_cut.
    """
    if xi_cut < 0:
        raise DomainError(f"xi_cut must be >= 0, got {xi_cut}")
    if xi_cut == 0:
        return 0.0
    total, _ = _xi_integral(cfg.with_temperature(0.0), spec, workers=workers)
    if total == 0:
        raise DomainError("the energy vanishes, the weight is undefined")
    if math.isinf(xi_cut):
        return 1.0
    partial, _ = _xi_integral(
        cfg.with_temperature(0.0), spec, xi_max=xi_cut, workers=workers
    )
    return min(max(partial / total, 0.0), 1.0)


def tabulate(
    cfgs: Sequence[CavityConfig],
    spec: QuadratureSpec = QuadratureSpec(),
    workers: Optional[int] = None,
) -> List[EnergyResult]:
    """Energies of several cavities, in input order."""
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda cfg: energy(cfg, spec), cfgs))
