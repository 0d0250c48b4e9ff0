from ..lifshitz.config import (
    CavityConfig,
    EnergyDifference,
    EnergyResult,
    QuadratureSpec,
)
from ..lifshitz.energy import (
    casimir_energy_T0,
    classical_limit,
    delta_U,
    energy,
    free_energy_T,
    low_frequency_weight,
    matsubara_frequency,
    per_molecule,
    tabulate,
)
from ..lifshitz.integrand import (
    integrand_omega,
    integrand_samples,
    integrand_xi,
    pec_q_integral,
    q_integral,
)

__all__ = [
    "CavityConfig",
    "EnergyDifference",
    "EnergyResult",
    "QuadratureSpec",
    "casimir_energy_T0",
    "classical_limit",
    "delta_U",
    "energy",
    "free_energy_T",
    "integrand_omega",
    "integrand_samples",
    "integrand_xi",
    "low_frequency_weight",
    "matsubara_frequency",
    "pec_q_integral",
    "per_molecule",
    "q_integral",
    "tabulate",
]
