from ..fresnel.reflection import (
    StackAtFrequency,
    combine_layers,
    kz_imag,
    r_interface,
    r_stack,
    r_stack_complex,
    r_stack_static,
)
from ..fresnel.stack import (
    GOLD_FILM_THICKNESS,
    Layer,
    MirrorStack,
    Polarization,
    gold_mirror,
)
from ..fresnel.transmission import (
    transmission,
    transmission_maxima,
    transmission_spectrum,
)

__all__ = [
    "GOLD_FILM_THICKNESS",
    "Layer",
    "MirrorStack",
    "Polarization",
    "StackAtFrequency",
    "combine_layers",
    "gold_mirror",
    "kz_imag",
    "r_interface",
    "r_stack",
    "r_stack_complex",
    "r_stack_static",
    "transmission",
    "transmission_maxima",
    "transmission_spectrum",
]
