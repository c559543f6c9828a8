"""Exact-arithmetic toolkit for digit-indexed lower-triangular matrices:
construction, one-parameter group law, nilpotent generators, coefficient
polynomial factorization, and the associated group relations."""

from . import cli, digits, exactpoly, matrix, ptm, sierpinski
from .digits import BaseBExpansion, carry_free, digit_sum, dominated_set, dominates
from .exactpoly import ONE, X, Y, ZERO, Polynomial, Rational, binom_rising
from .matrix import DEFAULT_CAP, Matrix, checked_dim
from .ptm import UniPoly, ZeroSumVector
from .sierpinski import (
    KroneckerChain,
    matrix_exp_nilpotent,
    s_chain,
    s_entry,
    s_matrix,
    s_numeric,
    structured_apply,
    x_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "cli",
    "digits",
    "exactpoly",
    "matrix",
    "ptm",
    "sierpinski",
    "BaseBExpansion",
    "carry_free",
    "digit_sum",
    "dominated_set",
    "dominates",
    "ONE",
    "X",
    "Y",
    "ZERO",
    "Polynomial",
    "Rational",
    "binom_rising",
    "DEFAULT_CAP",
    "Matrix",
    "checked_dim",
    "UniPoly",
    "ZeroSumVector",
    "KroneckerChain",
    "matrix_exp_nilpotent",
    "s_chain",
    "s_entry",
    "s_matrix",
    "s_numeric",
    "structured_apply",
    "x_matrix",
    "__version__",
]
