"""Mod 2 Dyer-Lashof and Nishida calculus for iterated loop spaces of spheres,
with an elimination driver for candidate spherical square classes."""
from .dl_core import INFINITY, Element, LowerWord, UpperWord, adem_normalize, apply_Q, dim_lower, to_lower, to_upper
from .nishida import is_A_annihilated, sq_dual, sq_dual_word

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "Element",
    "LowerWord",
    "UpperWord",
    "adem_normalize",
    "apply_Q",
    "dim_lower",
    "is_A_annihilated",
    "sq_dual",
    "sq_dual_word",
    "to_lower",
    "to_upper",
]
