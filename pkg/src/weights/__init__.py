from src.weights.models import (
    AffineForm,
    AffineWeight,
    NormalizationResult,
    RootSystem,
    RootSystemType,
    Weight,
)
from src.weights.root_system import dotted_normalize, rho, weyl_dim

__all__ = [
    "AffineForm",
    "AffineWeight",
    "NormalizationResult",
    "RootSystem",
    "RootSystemType",
    "Weight",
    "dotted_normalize",
    "rho",
    "weyl_dim",
]
