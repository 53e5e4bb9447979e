"""Finite-field linear codes: hulls, hull-varying equivalences and EAQEC parameters."""

from .code import CodeParams, LinearCode, WeightDistribution, macwilliams_selfdual_check
from .field import FieldElement, FieldSpec, gf
from .linalg import GFMatrix

__all__ = ["CodeParams", "FieldElement", "FieldSpec", "GFMatrix", "LinearCode",
           "WeightDistribution", "gf", "macwilliams_selfdual_check"]
