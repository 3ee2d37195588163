"""Exact and numerical computation of Toeplitz-minor ratios.

Two exact routes (Bump-Diaconis class sums and the Tracy-Widom determinant)
produce the same polynomial in power sums; a third route takes determinant
ratios of finite Toeplitz minors for a concrete symbol.
"""

from .bd_formula import bd_poly, f_factor, laguerre
from .characters import CharacterCache, character
from .exceptions import PreconditionError, SingularDenominatorError, TruncationRangeError
from .partitions import EMPTY, Partition, contains, multiplicity, partitions_of, z_value
from .symfunc import (
    Monomial,
    SymbolSpec,
    SymPoly,
    complete_h,
    delta,
    evaluate,
    inner_product,
    jacobi_trudi,
    perp,
    schur,
    skew_schur,
)
from .toeplitz_numeric import CrossCheckReport, cross_check, d_coeffs, h_coeffs, minor_matrix, ratio_sequence
from .tw_formula import tw_entry, tw_poly, tw_relation_check

__version__ = "0.1.0"
