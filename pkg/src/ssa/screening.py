"""
Static screening approximation: eps(i xi) is frozen at its xi = 0 value,
which turns the perfect-mirror Lifshitz energy into a closed form.
"""

import logging
import math
from dataclasses import dataclass

from scipy.constants import c, hbar, pi
from scipy.integrate import quad

from ..dielectric.materials import LorentzMedium
from ..utils.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SsaInput:
    L: float
    omega0: float
    g: float
    eps_inf: float = 1.0

    def __post_init__(self) -> None:
        if not self.L > 0:
            raise DomainError(f"L must be > 0, got {self.L}")
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")
        if not self.g >= 0:
            raise DomainError(f"g must be >= 0, got {self.g}")
        if not self.eps_inf >= 1:
            raise DomainError(f"eps_inf must be >= 1, got {self.eps_inf}")

    @property
    def static_eps(self) -> float:
        return self.eps_inf + 4 * self.g**2 / self.omega0**2


@dataclass(frozen=True)
class SsaConstants:
    """Numerical building blocks of the closed form and their deviations."""

    x_integral: float
    x_deviation: float
    p_integral: float
    p_deviation: float
    prefactor: float
    prefactor_deviation: float


def empty_pec_energy(L: float) -> float:
    """-hbar c pi^2 / (720 L^3), the empty perfect-mirror cavity."""
    if not L > 0:
        raise DomainError(f"L must be > 0, got {L}")
    return -hbar * c * pi**2 / (720 * L**3)


def ssa_energy(ssa_input: SsaInput) -> float:
    """Energy per area of a perfect-mirror cavity screened by eps(i0)."""
    return empty_pec_energy(ssa_input.L) / math.sqrt(ssa_input.static_eps)


def ssa_relative_shift(omega0: float, g: float, eps_inf: float = 1.0) -> float:
    """
    1 - sqrt(eps_inf / eps(i0)), the reduction of |U| relative to the
    uncoupled cavity with the same background. eps_inf = 1 gives
    1 - 1/sqrt(1 + 4 g^2 / omega0^2).
    """
    if not omega0 > 0:
        raise DomainError(f"omega0 must be > 0, got {omega0}")
    if not g >= 0:
        raise DomainError(f"g must be >= 0, got {g}")
    if not eps_inf >= 1:
        raise DomainError(f"eps_inf must be >= 1, got {eps_inf}")
    x = 4 * g**2 / (omega0**2 * eps_inf)
    root = math.sqrt(1 + x)
    return x / (root * (root + 1))


def ssa_overlay(u_uncoupled: float, medium: LorentzMedium) -> float:
    """
    U(g=0) screened by the static coupling, for mirrors or temperatures
    without a closed form. Equals U(g=0) / sqrt(eps(i0)) for eps_inf = 1.
    """
    return u_uncoupled * math.sqrt(medium.eps_inf / medium.static_eps())


def ssa_integral_constants(epsrel: float = 1e-12) -> SsaConstants:
    """
    Evaluates int_0^inf x^2 ln(1 - e^{-x}) dx = -pi^4/45 and
    int_1^inf p^{-3} dp = 1/2, and assembles the -pi^2/720 prefactor.

    Raises:
        ConvergenceError: If either quadrature fails.
    """

    def x_term(x: float) -> float:
        return x * x * math.log1p(-math.exp(-x)) if x > 0 else 0.0

    x_value, x_error, *rest = quad(
        x_term,
        0.0,
        math.inf,
        epsabs=0.0,
        epsrel=epsrel,
        limit=200,
        full_output=1,
    )
    if rest[1:]:
        raise ConvergenceError(
            f"x-integral failed: {rest[1]}", x_value, x_error / abs(x_value)
        )
    p_value, p_error, *rest = quad(
        lambda p: p**-3, 1.0, math.inf, epsabs=0.0, epsrel=epsrel, full_output=1
    )
    if rest[1:]:
        raise ConvergenceError(
            f"p-integral failed: {rest[1]}", p_value, p_error / abs(p_value)
        )

    x_exact = -(pi**4) / 45
    prefactor = x_value * p_value / (8 * pi**2)
    logger.debug(f"Static screening prefactor {prefactor:.15e}")
    return SsaConstants(
        x_integral=x_value,
        x_deviation=abs(x_value - x_exact),
        p_integral=p_value,
        p_deviation=abs(p_value - 0.5),
        prefactor=prefactor,
        prefactor_deviation=abs(prefactor + pi**2 / 720),
    )
