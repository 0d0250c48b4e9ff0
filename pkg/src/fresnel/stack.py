import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from ..dielectric.materials import (
    DielectricModel,
    PerfectConductor,
    glass,
    gold,
)
from ..utils.exceptions import ConfigError

# gold film thickness of the realistic cavity mirrors
GOLD_FILM_THICKNESS = 30e-9


class Polarization(str, Enum):
    P = "p"
    S = "s"


@dataclass(frozen=True)
class Layer:
    """
    A homogeneous layer. thickness None marks the terminating half-space.
    """

    material: DielectricModel
    thickness: Optional[float] = None

    @property
    def is_half_space(self) -> bool:
        return self.thickness is None


@dataclass(frozen=True)
class MirrorStack:
    """
    Ordered layers of one mirror, the first adjacent to the cavity gap and
    the last a half-space.
    """

    layers: Tuple[Layer, ...]

    def __post_init__(self) -> None:
        layers = tuple(self.layers)
        object.__setattr__(self, "layers", layers)
        if not layers:
            raise ConfigError(
                "layers", "a mirror stack needs at least one layer"
            )
        for index, layer in enumerate(layers):
            last = index == len(layers) - 1
            if layer.is_half_space != last:
                raise ConfigError(
                    f"layers[{index}]",
                    "exactly the last layer must be a half-space",
                )
            if not last and not (
                layer.thickness > 0 and math.isfinite(layer.thickness)
            ):
                raise ConfigError(
                    f"layers[{index}]", "thickness must be finite and > 0"
                )
            if isinstance(layer.material, PerfectConductor) and not last:
                raise ConfigError(
                    f"layers[{index}]",
                    "a perfect conductor can only be the last half-space",
                )

    @classmethod
    def pec(cls) -> "MirrorStack":
        return cls((Layer(PerfectConductor()),))

    @classmethod
    def half_space(cls, material: DielectricModel) -> "MirrorStack":
        return cls((Layer(material),))

    @classmethod
    def film_on_substrate(
        cls,
        film: DielectricModel,
        thickness: float,
        substrate: DielectricModel,
    ) -> "MirrorStack":
        return cls((Layer(film, thickness), Layer(substrate)))

    @classmethod
    def from_layers(
        cls, layers: Sequence[Tuple[DielectricModel, float]]
    ) -> "MirrorStack":
        """
        Builds a stack from (material, thickness) pairs, thickness inf for
        the half-space.
        """
        return cls(
            tuple(
                Layer(m, None if math.isinf(d) else d) for m, d in layers
            )
        )

    @property
    def is_perfect(self) -> bool:
        """True when the gap faces a perfect conductor directly."""
        return isinstance(self.layers[0].material, PerfectConductor)

    @property
    def substrate(self) -> DielectricModel:
        return self.layers[-1].material


def gold_mirror(
    thickness: Optional[float] = GOLD_FILM_THICKNESS,
) -> MirrorStack:
    """
    Gold film on glass, or a gold half-space when thickness is None.
    """
    if thickness is None:
        return MirrorStack.half_space(gold())
    return MirrorStack.film_on_substrate(gold(), thickness, glass())
