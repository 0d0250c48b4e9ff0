from ..hopfield.polaritons import (
    CouplingSpec,
    PolaritonPair,
    bulk_polaritons,
    bulk_wavevector_squared,
    cavity_mode,
    cavity_polaritons,
    coulomb_coupling,
    polariton_gap,
    single_mode_levels,
    single_mode_polaritons,
    single_mode_relative,
    single_mode_shift,
)

__all__ = [
    "CouplingSpec",
    "PolaritonPair",
    "bulk_polaritons",
    "bulk_wavevector_squared",
    "cavity_mode",
    "cavity_polaritons",
    "coulomb_coupling",
    "polariton_gap",
    "single_mode_levels",
    "single_mode_polaritons",
    "single_mode_relative",
    "single_mode_shift",
]
