from ..dielectric.materials import (
    GLASS_EPS,
    VACUUM,
    WATER_EPS,
    ConstantDielectric,
    DielectricModel,
    DrudeMetal,
    LorentzMedium,
    PerfectConductor,
    glass,
    gold,
    has_real_pole,
    is_lossy,
    material_from_record,
    named_material,
    water,
    water_with,
)
from ..dielectric.permittivity import eps_imag, eps_real

__all__ = [
    "ConstantDielectric",
    "DielectricModel",
    "DrudeMetal",
    "GLASS_EPS",
    "LorentzMedium",
    "PerfectConductor",
    "VACUUM",
    "WATER_EPS",
    "eps_imag",
    "eps_real",
    "glass",
    "gold",
    "has_real_pole",
    "is_lossy",
    "material_from_record",
    "named_material",
    "water",
    "water_with",
]
