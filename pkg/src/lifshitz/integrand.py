"""
Wavevector integral of the Lifshitz formula at a fixed frequency.

With u = 2 k_z L the integral over the in-plane wavevector becomes

    int_0^inf q dq ln(1 - R e^{-2 k_z L})
        = 1/(4 L^2) int_{u0}^inf u ln(1 - R e^{-u}) du,

u0 = 2 L sqrt(eps) xi / c. For perfect mirrors R = 1 and the integral is
-(u0 Li2(e^{-u0}) + Li3(e^{-u0})) per polarization.
"""

import cmath
import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Tuple, Union

import mpmath
from scipy.constants import c, hbar, pi
from scipy.integrate import quad

from ..dielectric.materials import has_real_pole, is_lossy
from ..dielectric.permittivity import eps_imag, eps_real
from ..fresnel.reflection import StackAtFrequency, r_stack_static
from ..fresnel.stack import Polarization
from ..lifshitz.config import CavityConfig
from ..utils.exceptions import DomainError

logger = logging.getLogger(__name__)

PREFACTOR = hbar / (4 * pi**2)
POLARIZATIONS = (Polarization.P, Polarization.S)
# e^{-60} is below double precision relative to the leading term
U_MAX = 60.0
U_SPLIT = 1.0
INNER_LIMIT = 200

# one mpmath context per thread: polylog changes its working precision
_contexts = threading.local()


def _mp() -> mpmath.MPContext:
    ctx = getattr(_contexts, "mp", None)
    if ctx is None:
        ctx = _contexts.mp = mpmath.MPContext()
    return ctx


def pec_q_integral(u0: Union[float, complex], length: float):
    """
    Closed-form wavevector integral for two perfect mirrors, both
    polarizations included. Valid for complex u0 (continuation to real
    frequency).
    """
    if u0.real > 700:
        return 0.0 if isinstance(u0, float) else 0j
    mp = _mp()
    z = mp.exp(-mp.mpmathify(u0))
    value = u0 * mp.polylog(2, z) + mp.polylog(3, z)
    value = -value / (2 * length**2)
    return float(mp.re(value)) if isinstance(u0, float) else complex(value)


def _integrate(func, bounds: Iterable[Tuple[float, float]], epsrel: float):
    value, error = 0.0, 0.0
    for lower, upper in bounds:
        result = quad(
            func,
            lower,
            upper,
            epsabs=0.0,
            epsrel=epsrel,
            limit=INNER_LIMIT,
            full_output=1,
        )
        value += result[0]
        error += result[1]
        if len(result) > 3:
            logger.debug(
                f"Wavevector quadrature on [{lower}, {upper}]: {result[3]}"
            )
    return value, error


def static_q_integral(cfg: CavityConfig, epsrel: float) -> float:
    """Wavevector integral at xi = 0 using the static reflection limits."""
    if cfg.is_perfect:
        return pec_q_integral(0.0, cfg.L)
    eps0 = float(eps_imag(cfg.gap, 0.0))
    L = cfg.L

    def integrand(u: float) -> float:
        q = u / (2 * L)
        decay = math.exp(-u)
        total = 0.0
        for pol in POLARIZATIONS:
            r = r_stack_static(cfg.top, eps0, q, pol) * r_stack_static(
                cfg.bottom, eps0, q, pol
            )
            total += math.log1p(-r * decay)
        return u * total

    value, _ = _integrate(
        integrand, ((0.0, U_SPLIT), (U_SPLIT, U_MAX)), epsrel
    )
    return value / (4 * L**2)


def q_integral(cfg: CavityConfig, xi: float, epsrel: float) -> float:
    """
    int_0^inf q dq sum_pol ln(1 - r_top r_bottom e^{-2 k_z L}) at imaginary
    frequency xi >= 0, in 1/m^2.
    """
    if xi < 0 or math.isnan(xi):
        raise DomainError(f"xi must be >= 0, got {xi}")
    if xi == 0:
        return static_q_integral(cfg, epsrel)
    eps_gap = float(eps_imag(cfg.gap, xi))
    L = cfg.L
    u0 = 2 * L * math.sqrt(eps_gap) * xi / c
    if cfg.is_perfect:
        return pec_q_integral(u0, L)
    if u0 > 700:
        return 0.0

    top = StackAtFrequency.build(cfg.top, xi)
    bottom = StackAtFrequency.build(cfg.bottom, xi)

    def integrand(t: float) -> float:
        u = u0 + t
        q = math.sqrt(t * (t + 2 * u0)) / (2 * L)
        kz = u / (2 * L)
        decay = math.exp(-u)
        total = 0.0
        for pol in POLARIZATIONS:
            r = top.reflection(eps_gap, q, pol, kz) * bottom.reflection(
                eps_gap, q, pol, kz
            )
            total += math.log1p(-r * decay)
        return u * total

    value, _ = _integrate(
        integrand, ((0.0, U_SPLIT), (U_SPLIT, U_MAX)), epsrel
    )
    return value / (4 * L**2)


def integrand_xi(
    cfg: CavityConfig, xi: float, epsrel: Optional[float] = None
) -> float:
    """
    Energy per area per unit imaginary frequency, U_xi in J s / m^2.

    Args:
        cfg (CavityConfig): The cavity; its temperature is ignored.
        xi (float): Imaginary frequency in rad/s, >= 0.
        epsrel (float, optional): Tolerance of the wavevector integral.

    Returns:
        float: U_xi, negative for identical passive mirrors.
    """
    return PREFACTOR * q_integral(cfg, xi, 1e-10 if epsrel is None else epsrel)


def _complex_q_integral(
    cfg: CavityConfig, xi: complex, eps_gap: complex, epsrel: float
) -> float:
    """
    Real part of the wavevector integral at complex xi, integrated along
    real q and split at the light line.
    """
    L = cfg.L
    top = StackAtFrequency.build(cfg.top, xi)
    bottom = StackAtFrequency.build(cfg.bottom, xi)
    k0_squared = (xi / c) ** 2

    def integrand(x: float) -> float:
        q = x / (2 * L)
        kz = cmath.sqrt(q * q + eps_gap * k0_squared)
        decay = cmath.exp(-2 * kz * L)
        total = 0.0
        for pol in POLARIZATIONS:
            r = top.reflection(eps_gap, q, pol, kz) * bottom.reflection(
                eps_gap, q, pol, kz
            )
            magnitude = abs(1 - r * decay)
            if magnitude == 0:
                return -math.inf
            total += math.log(magnitude)
        return x * total

    light_line = 2 * L * abs(cmath.sqrt(eps_gap)) * abs(xi) / c
    value, _ = _integrate(
        integrand,
        ((0.0, light_line), (light_line, light_line + U_MAX)),
        epsrel,
    )
    return value / (4 * L**2)


def _require_lossy(cfg: CavityConfig) -> None:
    media = [cfg.gap] + [
        layer.material
        for stack in (cfg.top, cfg.bottom)
        for layer in stack.layers
    ]
    for material in media:
        if has_real_pole(material) and not is_lossy(material):
            raise DomainError(
                f"real-frequency diagnostics need lossy media, got {material}"
            )


def integrand_omega(cfg: CavityConfig, omega: float, gamma: float) -> float:
    """
    Diagnostic U_omega: the real part of U_xi continued to the real
    frequency omega with a broadening gamma, xi = gamma - i omega.

    Unlike U_xi it oscillates, changing sign near the cavity modes, and
    keeps one sign across the polaritonic gap.

    Raises:
        DomainError: For gamma <= 0, omega < 0, or an undamped Lorentz or
            Drude medium anywhere in the cavity. Without losses the
            wavevector integral does not converge.
    """
    if not gamma > 0:
        raise DomainError("real-frequency diagnostics need a broadening > 0")
    if omega < 0:
        raise DomainError(f"omega must be >= 0, got {omega}")
    _require_lossy(cfg)
    xi = complex(gamma, -omega)
    eps_gap = complex(eps_real(cfg.gap, 1j * xi))
    if cfg.is_perfect:
        u0 = 2 * cfg.L * cmath.sqrt(eps_gap * xi * xi) / c
        return PREFACTOR * complex(pec_q_integral(u0, cfg.L)).real
    return PREFACTOR * _complex_q_integral(cfg, xi, eps_gap, 1e-7)


def integrand_samples(
    cfg: CavityConfig,
    xis: Iterable[float],
    epsrel: Optional[float] = None,
    workers: Optional[int] = None,
) -> List[Tuple[float, float]]:
    """(xi, U_xi) pairs in the order of xis."""
    xis = [float(xi) for xi in xis]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        values = list(executor.map(lambda x: integrand_xi(cfg, x, epsrel), xis))
    return list(zip(xis, values))
