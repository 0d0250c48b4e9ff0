import dataclasses
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..dielectric.materials import (
    VACUUM,
    DielectricModel,
    DrudeMetal,
    LorentzMedium,
    PerfectConductor,
)
from ..fresnel.stack import MirrorStack
from ..utils.exceptions import DomainError
from ..utils.units import omega_cavity


@dataclass(frozen=True)
class CavityConfig:
    """
    Planar cavity: gap of length L filled with `gap` between two mirror
    stacks, at temperature T (0 for the zero-temperature energy).
    """

    L: float
    gap: DielectricModel = VACUUM
    top: MirrorStack = field(default_factory=MirrorStack.pec)
    bottom: MirrorStack = field(default_factory=MirrorStack.pec)
    T: float = 0.0

    def __post_init__(self) -> None:
        if not (self.L > 0 and math.isfinite(self.L)):
            raise DomainError(f"L must be > 0, got {self.L}")
        if not self.T >= 0:
            raise DomainError(f"T must be >= 0, got {self.T}")
        if isinstance(self.gap, (PerfectConductor, DrudeMetal)):
            raise DomainError("the gap must be a dielectric")

    @property
    def omega_L(self) -> float:
        return omega_cavity(self.L)

    @property
    def is_perfect(self) -> bool:
        """Both mirrors are perfect conductors."""
        return self.top.is_perfect and self.bottom.is_perfect

    def reference_frequency(self) -> float:
        """max(omega0, pi c / L), the scale of the frequency map."""
        if isinstance(self.gap, LorentzMedium):
            return max(self.gap.omega0, self.omega_L)
        return self.omega_L

    def with_length(self, length: float) -> "CavityConfig":
        return dataclasses.replace(self, L=length)

    def with_temperature(self, temperature: float) -> "CavityConfig":
        return dataclasses.replace(self, T=temperature)

    def with_coupling(self, g: float) -> "CavityConfig":
        if not isinstance(self.gap, LorentzMedium):
            raise DomainError("the coupling can only be set on a Lorentz gap")
        return dataclasses.replace(self, gap=self.gap.with_coupling(g))


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-8
    max_subdivisions: int = 200
    matsubara_rel_cutoff: float = 1e-10
    max_matsubara_terms: int = 200_000

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if not self.matsubara_rel_cutoff > 0:
            raise DomainError("matsubara_rel_cutoff must be > 0")
        if self.max_matsubara_terms < 1:
            raise DomainError("max_matsubara_terms must be >= 1")

    @property
    def inner_rel_tol(self) -> float:
        """Tolerance of the wavevector integral, well below the outer one."""
        return max(self.rel_tol * 1e-2, 1e-13)


@dataclass(frozen=True)
class EnergyResult:
    u_per_area: float
    rel_tol_achieved: float
    matsubara_terms_used: Optional[int] = None
    xi_integrand_samples: Optional[List[Tuple[float, float]]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "u_per_area": self.u_per_area,
            "rel_tol_achieved": self.rel_tol_achieved,
            "matsubara_terms_used": self.matsubara_terms_used,
        }
        if self.xi_integrand_samples is not None:
            data["xi_integrand_samples"] = [
                {"xi_rad_per_s": xi, "U_xi": u}
                for xi, u in self.xi_integrand_samples
            ]
        return data


@dataclass(frozen=True)
class EnergyDifference:
    """U(g_on) - U(g_off) with both converged energies kept."""

    delta: float
    coupled: EnergyResult
    uncoupled: EnergyResult

    @property
    def rel_tol_achieved(self) -> float:
        return self.coupled.rel_tol_achieved + self.uncoupled.rel_tol_achieved
