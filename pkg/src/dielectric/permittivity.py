import numpy as np

from ..dielectric.materials import (
    ConstantDielectric,
    DielectricModel,
    DrudeMetal,
    LorentzMedium,
    PerfectConductor,
)
from ..utils.exceptions import DomainError, SpecialCaseError


def _scalar_or_array(value):
    return value.item() if np.ndim(value) == 0 else value


def eps_imag(material: DielectricModel, xi):
    """
    Permittivity on the imaginary frequency axis, eps(i xi).

    Real, positive and non-increasing in xi for every passive model.

    Args:
        material: Lorentz, Drude or constant model.
        xi: Imaginary frequency in rad/s (float or array), xi >= 0.

    Returns:
        float or numpy.ndarray: eps(i xi).

    Raises:
        DomainError: For xi < 0 or a perfect conductor.
        SpecialCaseError: For a Drude metal at xi = 0, where the reflection
            limit must be used instead.
    """
    xi = np.asarray(xi, dtype=float)
    if np.any(np.isnan(xi)) or np.any(xi < 0):
        raise DomainError("imaginary frequency must be >= 0")

    if isinstance(material, LorentzMedium):
        eps = material.eps_inf + material.strength / (
            material.omega0**2 + xi**2 + xi * material.gamma
        )
    elif isinstance(material, DrudeMetal):
        if np.any(xi == 0):
            raise SpecialCaseError(
                "Drude permittivity diverges at xi = 0; use the static "
                "reflection limit"
            )
        eps = 1.0 + material.omega_p**2 / (xi**2 + xi * material.gamma)
    elif isinstance(material, ConstantDielectric):
        eps = np.full_like(xi, material.eps)
    elif isinstance(material, PerfectConductor):
        raise DomainError("a perfect conductor has no finite permittivity")
    else:
        raise DomainError(f"unknown material {material!r}")
    return _scalar_or_array(eps)


def eps_real(material: DielectricModel, omega):
    """
    Permittivity at a complex frequency in the upper half-plane.

    For real omega this is the physical response; eps_real(m, 1j * xi)
    equals eps_imag(m, xi).

    Raises:
        DomainError: For Im(omega) < 0, a perfect conductor, or a lossless
            pole hit exactly.
        SpecialCaseError: For a Drude metal at omega = 0.
    """
    omega = np.asarray(omega, dtype=complex)
    if np.any(np.isnan(omega)) or np.any(omega.imag < 0):
        raise DomainError("frequency must lie in the upper half-plane")

    if isinstance(material, LorentzMedium):
        denominator = (
            material.omega0**2 - omega**2 - 1j * omega * material.gamma
        )
        if np.any(denominator == 0):
            raise DomainError("lossless Lorentz pole at omega = omega0")
        eps = material.eps_inf + material.strength / denominator
    elif isinstance(material, DrudeMetal):
        if np.any(omega == 0):
            raise SpecialCaseError("Drude permittivity diverges at omega = 0")
        eps = 1.0 - material.omega_p**2 / (
            omega**2 + 1j * omega * material.gamma
        )
    elif isinstance(material, ConstantDielectric):
        eps = np.full_like(omega, material.eps)
    elif isinstance(material, PerfectConductor):
        raise DomainError("a perfect conductor has no finite permittivity")
    else:
        raise DomainError(f"unknown material {material!r}")
    return _scalar_or_array(eps)
