from ..ssa.screening import (
    SsaConstants,
    SsaInput,
    empty_pec_energy,
    ssa_energy,
    ssa_integral_constants,
    ssa_overlay,
    ssa_relative_shift,
)

__all__ = [
    "SsaConstants",
    "SsaInput",
    "empty_pec_energy",
    "ssa_energy",
    "ssa_integral_constants",
    "ssa_overlay",
    "ssa_relative_shift",
]
