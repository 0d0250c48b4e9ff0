"""
Closed-form polariton branches and single-mode ground-state shifts of a
Lorentz resonance coupled to cavity photons.

Both branches solve (w^2 - w_m^2)(w^2 - w0^2) = 4 g^2 w^2 for a photon
mode w_m.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.constants import c, hbar, pi

from ..dielectric.materials import LorentzMedium
from ..dielectric.permittivity import eps_real
from ..utils.exceptions import DomainError
from ..utils.units import omega_cavity


@dataclass(frozen=True)
class CouplingSpec:
    """
    Matter resonance omega0, collective coupling g and fundamental cavity
    frequency omegaL = pi c / L, all in rad/s.
    """

    omega0: float
    g: float
    omegaL: float

    def __post_init__(self) -> None:
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")
        if not self.g >= 0:
            raise DomainError(f"g must be >= 0, got {self.g}")
        if not self.omegaL > 0:
            raise DomainError(f"omegaL must be > 0, got {self.omegaL}")

    @classmethod
    def for_length(cls, omega0: float, g: float, L: float) -> "CouplingSpec":
        return cls(omega0, g, omega_cavity(L))


@dataclass(frozen=True)
class PolaritonPair:
    omega_plus: float
    omega_minus: float


def _roots(omega_mode, omega0, g):
    """
    Both branches without cancellation: w+^2 = A + D and
    w-^2 = w_m^2 w0^2 / (A + D).
    """
    m2 = omega_mode**2
    o2 = omega0**2
    g2 = g**2
    a = 0.5 * (m2 + o2 + 4 * g2)
    d = np.sqrt((0.5 * (m2 - o2)) ** 2 + 2 * g2 * (m2 + o2) + 4 * g2**2)
    plus2 = a + d
    return np.sqrt(plus2), np.sqrt(m2 * o2 / plus2)


def bulk_polaritons(k, spec: CouplingSpec) -> PolaritonPair:
    """
    Bulk polaritons at wavevector k (rad/m), photon line w = c k.

    Args:
        k (float or numpy.ndarray): Wavevector, > 0.
        spec (CouplingSpec): Resonance and coupling; omegaL is not used.

    Returns:
        PolaritonPair: Upper and lower branch in rad/s.
    """
    if np.any(np.asarray(k) <= 0):
        raise DomainError("k must be > 0")
    plus, minus = _roots(c * np.asarray(k, dtype=float), spec.omega0, spec.g)
    return PolaritonPair(_unwrap(plus), _unwrap(minus))


def cavity_mode(q, n, L: float):
    """w_{q,n} = c sqrt(q^2 + (pi n / L)^2)."""
    q = np.asarray(q, dtype=float)
    return c * np.sqrt(q**2 + (pi * np.asarray(n) / L) ** 2)


def cavity_polaritons(q, n, L: float, spec: CouplingSpec) -> PolaritonPair:
    """
    Polaritons of cavity band n at in-plane wavevector q.
    """
    if np.any(np.asarray(n) < 1) or np.any(np.asarray(q) < 0):
        raise DomainError("n must be >= 1 and q >= 0")
    if not L > 0:
        raise DomainError(f"L must be > 0, got {L}")
    plus, minus = _roots(cavity_mode(q, n, L), spec.omega0, spec.g)
    return PolaritonPair(_unwrap(plus), _unwrap(minus))


def single_mode_polaritons(spec: CouplingSpec) -> PolaritonPair:
    plus, minus = _roots(spec.omegaL, spec.omega0, spec.g)
    return PolaritonPair(float(plus), float(minus))


def single_mode_shift(spec: CouplingSpec) -> float:
    """
    Ground-state shift of the single-mode model,
    hbar (w+ + w- - w0 - wL) / 2, in J.

    Uses (w+ + w-)^2 = (w0 + wL)^2 + 4 g^2, so it is non-negative and
    accurate for small g.
    """
    s = spec.omega0 + spec.omegaL
    g2 = 4 * spec.g**2
    return float(0.5 * hbar * g2 / (np.sqrt(s**2 + g2) + s))


def single_mode_relative(spec: CouplingSpec) -> float:
    """Shift relative to the uncoupled ground level hbar (w0 + wL) / 2."""
    x = (2 * spec.g / (spec.omega0 + spec.omegaL)) ** 2
    return float(x / (np.sqrt(1 + x) + 1))


def polariton_gap(spec: CouplingSpec) -> float:
    """sqrt(w0^2 + 4 g^2) - w0, the band without bulk polaritons."""
    g2 = 4 * spec.g**2
    return float(g2 / (np.sqrt(spec.omega0**2 + g2) + spec.omega0))


def single_mode_levels(
    spec: CouplingSpec, l_max: int, m_max: int
) -> List[Tuple[int, int, float]]:
    """
    Ladder w_{l,m} = (l + 1/2) w+ + (m + 1/2) w- of the single-mode model.
    """
    if l_max < 0 or m_max < 0:
        raise DomainError("l_max and m_max must be >= 0")
    pair = single_mode_polaritons(spec)
    return [
        (l, m, (l + 0.5) * pair.omega_plus + (m + 0.5) * pair.omega_minus)
        for l in range(l_max + 1)
        for m in range(m_max + 1)
    ]


def coulomb_coupling(spec: CouplingSpec, omega_k: float) -> float:
    """Coulomb-gauge coupling g_C with g_C^2 = g^2 w0 / w_k."""
    if not omega_k > 0:
        raise DomainError(f"omega_k must be > 0, got {omega_k}")
    return spec.g * float(np.sqrt(spec.omega0 / omega_k))


def bulk_wavevector_squared(omega, spec: CouplingSpec):
    """
    k^2 = eps(w) w^2 / c^2 of the lossless medium; negative inside the
    polaritonic gap.
    """
    medium = LorentzMedium(spec.omega0, spec.g)
    eps = np.real(eps_real(medium, omega))
    return _unwrap(eps * np.asarray(omega, dtype=float) ** 2 / c**2)


def _unwrap(value):
    value = np.asarray(value)
    return value.item() if value.ndim == 0 else value
