"""
Reflection amplitudes of mirror stacks on the imaginary frequency axis.

Sign convention: a perfect conductor seen from vacuum gives r_p = +1 and
r_s = -1. Only the product of the two mirrors enters the energy.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from scipy.constants import c

from ..dielectric.materials import DrudeMetal, PerfectConductor
from ..dielectric.permittivity import eps_imag, eps_real
from ..fresnel.stack import MirrorStack, Polarization
from ..utils.exceptions import DomainError

Number = Union[float, complex]


def kz_imag(eps: float, xi: float, q: float) -> float:
    """
    Normal wavevector sqrt(q^2 + eps xi^2 / c^2) on the imaginary axis.

    Real and >= q for eps >= 0.
    """
    if xi < 0 or q < 0:
        raise DomainError("xi and q must be >= 0")
    if eps < 0:
        raise DomainError(f"eps must be >= 0 on the imaginary axis, got {eps}")
    return math.sqrt(q * q + eps * (xi / c) ** 2)


def r_interface(
    eps_a: Number,
    kz_a: Number,
    eps_b: Number,
    kz_b: Number,
    pol: Polarization,
) -> Number:
    """
    Fresnel amplitude of a single interface, a being the incidence side.

    An infinite eps_b is the perfect-conductor limit.

    Raises:
        DomainError: If the denominator vanishes.
    """
    if isinstance(eps_b, float) and math.isinf(eps_b):
        return 1.0 if pol is Polarization.P else -1.0
    if pol is Polarization.P:
        numerator = eps_b * kz_a - eps_a * kz_b
        denominator = eps_b * kz_a + eps_a * kz_b
    else:
        numerator = kz_a - kz_b
        denominator = kz_a + kz_b
    if denominator == 0:
        raise DomainError("vanishing Fresnel denominator")
    return numerator / denominator


def combine_layers(
    interfaces: Sequence[Number], phases: Sequence[Number]
) -> Number:
    """
    Folds interface amplitudes from the terminal half-space inward.

    interfaces[i] couples media i and i+1, phases[i] = exp(-2 kz d) of the
    finite layer between interfaces i and i+1. A perfectly reflecting
    interface hides everything behind it.
    """
    r = interfaces[-1]
    for r_i, phase in zip(reversed(interfaces[:-1]), reversed(phases)):
        if abs(r_i) == 1.0:
            r = r_i
            continue
        rp = r * phase
        r = (r_i + rp) / (1.0 + r_i * rp)
    return r


@dataclass(frozen=True)
class StackAtFrequency:
    """
    A mirror stack with its permittivities fixed at one frequency.

    Built once per frequency so the wavevector integral only does scalar
    arithmetic. With a complex frequency it evaluates the continuation to
    real frequencies.
    """

    eps: Tuple[Number, ...]
    thickness: Tuple[float, ...]
    perfect: bool
    k0_squared: Number  # eps-free part of kz^2, xi^2 / c^2

    @classmethod
    def build(cls, stack: MirrorStack, xi: Number) -> "StackAtFrequency":
        eps: List[Number] = []
        perfect = False
        for layer in stack.layers:
            if isinstance(layer.material, PerfectConductor):
                perfect = True
                break
            if isinstance(xi, complex):
                eps.append(complex(eps_real(layer.material, 1j * xi)))
            else:
                eps.append(float(eps_imag(layer.material, xi)))
        thickness = tuple(
            layer.thickness
            for layer in stack.layers[: len(eps)]
            if layer.thickness is not None
        )
        return cls(tuple(eps), thickness, perfect, (xi / c) ** 2)

    def reflection(
        self,
        gap_eps: Number,
        q: Number,
        pol: Polarization,
        kz_gap: Optional[Number] = None,
    ) -> Number:
        if self.perfect and not self.eps:
            return 1.0 if pol is Polarization.P else -1.0
        sqrt: Callable = (
            cmath.sqrt
            if isinstance(self.k0_squared, complex) or isinstance(q, complex)
            else math.sqrt
        )
        exp: Callable = cmath.exp if sqrt is cmath.sqrt else math.exp
        q2 = q * q
        if kz_gap is None:
            kz_gap = sqrt(q2 + gap_eps * self.k0_squared)
        kz = [kz_gap] + [sqrt(q2 + e * self.k0_squared) for e in self.eps]
        eps = [gap_eps, *self.eps]
        interfaces = [
            r_interface(eps[i], kz[i], eps[i + 1], kz[i + 1], pol)
            for i in range(len(eps) - 1)
        ]
        if self.perfect:
            interfaces.append(1.0 if pol is Polarization.P else -1.0)
        phases = [
            exp(-2.0 * kz[i + 1] * d) for i, d in enumerate(self.thickness)
        ]
        return combine_layers(interfaces, phases)


def _static_eps(material) -> float:
    """Permittivity at xi = 0; infinite for conductors."""
    if isinstance(material, (DrudeMetal, PerfectConductor)):
        return math.inf
    return float(eps_imag(material, 0.0))


def _static_interface(
    material_a, eps_a: float, material_b, eps_b: float, pol: Polarization
) -> float:
    if pol is Polarization.S:
        # Drude metals are transparent to static s-waves
        return -1.0 if isinstance(material_b, PerfectConductor) else 0.0
    if math.isinf(eps_a) and math.isinf(eps_b):
        return 0.0
    if math.isinf(eps_b):
        return 1.0
    if math.isinf(eps_a):
        return -1.0
    return (eps_b - eps_a) / (eps_b + eps_a)


def r_stack_static(
    stack: MirrorStack, gap_eps: float, q: float, pol: Polarization
) -> float:
    """
    Zero-frequency limit of r_stack: k_z = q in every layer, a Drude metal
    reflects p fully and s not at all, a perfect conductor gives p = +1 and
    s = -1.
    """
    materials = [None] + [layer.material for layer in stack.layers]
    eps = [gap_eps] + [_static_eps(m) for m in materials[1:]]
    interfaces = [
        _static_interface(
            materials[i], eps[i], materials[i + 1], eps[i + 1], pol
        )
        for i in range(len(eps) - 1)
    ]
    phases = [
        math.exp(-2.0 * q * layer.thickness)
        for layer in stack.layers
        if layer.thickness is not None
    ]
    return combine_layers(interfaces, phases)


def r_stack(
    stack: MirrorStack,
    gap_eps: float,
    xi: float,
    q: float,
    pol: Polarization,
) -> float:
    """
    Reflection amplitude of a mirror stack seen from the gap at imaginary
    frequency xi and in-plane wavevector q.

    Args:
        stack (MirrorStack): Layers ordered from the gap outward.
        gap_eps (float): Gap permittivity at the same frequency.
        xi (float): Imaginary frequency in rad/s, >= 0.
        q (float): In-plane wavevector in rad/m, >= 0.
        pol (Polarization): p or s.

    Returns:
        float: r with |r| <= 1 for passive layers.
    """
    if xi < 0 or q < 0:
        raise DomainError("xi and q must be >= 0")
    if xi == 0:
        return r_stack_static(stack, gap_eps, q, pol)
    at_xi = StackAtFrequency.build(stack, float(xi))
    return float(at_xi.reflection(gap_eps, q, pol))


def r_stack_complex(
    stack: MirrorStack,
    gap_eps: complex,
    xi: complex,
    q: complex,
    pol: Polarization,
) -> complex:
    """
    Reflection amplitude continued to a complex xi with Re(xi) > 0, i.e.
    the real frequency omega = i xi seen with a finite broadening. k_z uses
    principal square roots.
    """
    xi = complex(xi)
    if xi.real <= 0:
        raise DomainError("xi must have a positive real part")
    prepared = StackAtFrequency.build(stack, xi)
    return complex(prepared.reflection(gap_eps, q, pol))
