import logging
from typing import List, Tuple

import numpy as np
from scipy.constants import c
from scipy.signal import find_peaks

from ..dielectric.materials import DielectricModel, PerfectConductor
from ..dielectric.permittivity import eps_real
from ..fresnel.stack import MirrorStack
from ..utils.exceptions import DomainError

logger = logging.getLogger(__name__)

Layers = List[Tuple[DielectricModel, float]]


def _index(material: DielectricModel, omega: np.ndarray) -> np.ndarray:
    # principal root keeps Im(n) >= 0 for passive media
    return np.sqrt(np.asarray(eps_real(material, omega), dtype=complex))


def _sequence(
    top: MirrorStack, gap: DielectricModel, bottom: MirrorStack, length: float
) -> Tuple[DielectricModel, Layers, DielectricModel]:
    """
    Incidence medium, finite layers in propagation order and exit medium.
    The light enters through the top substrate.
    """
    layers = [(l.material, l.thickness) for l in reversed(top.layers[:-1])]
    layers.append((gap, length))
    layers += [(l.material, l.thickness) for l in bottom.layers[:-1]]
    return top.substrate, layers, bottom.substrate


def transmission(
    top: MirrorStack,
    gap: DielectricModel,
    bottom: MirrorStack,
    omega,
    length: float,
):
    """
    Normal-incidence intensity transmittance of substrate|top|gap|bottom|
    substrate from the characteristic-matrix product of the finite layers.

    Args:
        top (MirrorStack): Upper mirror, first layer facing the gap.
        gap (DielectricModel): Gap filling.
        bottom (MirrorStack): Lower mirror, first layer facing the gap.
        omega (float or numpy.ndarray): Real angular frequencies, > 0.
        length (float): Gap length in m.

    Returns:
        float or numpy.ndarray: T in [0, 1].
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise DomainError("omega must be > 0")
    if length <= 0:
        raise DomainError("gap length must be > 0")

    incident, layers, exit_ = _sequence(top, gap, bottom, length)
    materials = [incident, exit_] + [m for m, _ in layers]
    if any(isinstance(m, PerfectConductor) for m in materials):
        result = np.zeros_like(omega)
        return result.item() if result.ndim == 0 else result

    n0 = _index(incident, omega)
    ns = _index(exit_, omega)
    m11 = np.ones_like(n0)
    m12 = np.zeros_like(n0)
    m21 = np.zeros_like(n0)
    m22 = np.ones_like(n0)
    for material, thickness in layers:
        n = _index(material, omega)
        delta = n * omega * thickness / c
        cos, sin = np.cos(delta), np.sin(delta)
        a11, a12, a21, a22 = cos, -1j * sin / n, -1j * n * sin, cos
        m11, m12, m21, m22 = (
            m11 * a11 + m12 * a21,
            m11 * a12 + m12 * a22,
            m21 * a11 + m22 * a21,
            m21 * a12 + m22 * a22,
        )
    b = m11 + m12 * ns
    c_ = m21 + m22 * ns
    result = 4.0 * n0.real * ns.real / np.abs(n0 * b + c_) ** 2
    return result.item() if result.ndim == 0 else result


def transmission_spectrum(
    top: MirrorStack,
    gap: DielectricModel,
    bottom: MirrorStack,
    omegas,
    length: float,
) -> np.ndarray:
    """T(omega) on a frequency grid."""
    return np.atleast_1d(transmission(top, gap, bottom, omegas, length))


def transmission_maxima(
    omegas, spectrum, min_prominence: float = 0.05
) -> np.ndarray:
    """
    Frequencies of the transmission peaks.

    Peaks with a prominence below min_prominence times the spectrum maximum
    are dropped.
    """
    omegas = np.asarray(omegas, dtype=float)
    spectrum = np.asarray(spectrum, dtype=float)
    if spectrum.size == 0 or spectrum.max() <= 0:
        return np.empty(0)
    peaks, _ = find_peaks(spectrum, prominence=min_prominence * spectrum.max())
    logger.debug(f"Found {len(peaks)} transmission maxima")
    return omegas[peaks]
