"""Exact cusp / Atkin-Lehner / invariance-group machinery.

Thin re-export of the compiled module.  Cusps, matrices and group symbols
cross the boundary as text in the same grammar the CLI uses ("inf", "1/3",
"[[1,0],[0,1]]", "84|2+"); unbounded integers come back as Python ints and
exact fractions as fractions.Fraction.
"""

from ._moonshine import (
    Data,
    atkin_lehner,
    canonical_cusp,
    cusp_classes,
    cusp_equiv_infinity,
    cusp_equivalent,
    cusp_width,
    eigen_member,
    normalize_symbol,
    pole_exponent,
    symbol_info,
    transform,
)

__all__ = [
    "Data",
    "atkin_lehner",
    "canonical_cusp",
    "cusp_classes",
    "cusp_equiv_infinity",
    "cusp_equivalent",
    "cusp_width",
    "eigen_member",
    "normalize_symbol",
    "pole_exponent",
    "symbol_info",
    "transform",
]
