"""Exact-arithmetic workbench for Hecke algebras, cells, involution modules
and equivariant K-rings at desk scale (ranks <= 3 and dihedral groups)."""

from .laurent import LaurentPoly, RationalFn
from .coxeter import CoxeterSystem, CoxeterElement, InfiniteGroupError

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "CoxeterSystem",
    "CoxeterElement",
    "InfiniteGroupError",
]
