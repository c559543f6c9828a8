"""Lower-triangular digit matrices, their one-parameter group law, and the
nilpotent generators whose exponential recovers them.

Everything is exact: matrix entries are Polynomial (variables x, y) or
Fraction, never floats. Dense constructions go through the Kronecker
recursion; closed-form entries come straight from digit expansions, and the
two routes are checked against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .digits import dominated_set, dominates, multiplicity, to_digits
from .exactpoly import ONE, X, Y, ZERO, Polynomial, Rational, binom_rising
from .matrix import DEFAULT_CAP, Matrix, checked_dim

__all__ = [
    "s_base",
    "kronecker",
    "s_matrix",
    "s_numeric",
    "s_entry",
    "verify_one_parameter",
    "digital_binomial_sides",
    "multiplicity_identity_sides",
    "gould_check",
    "shifted_gould_check",
    "stirling_first",
    "stirling_identity_check",
    "x_base",
    "x_matrix",
    "x_power_entry_check",
    "matrix_exp_nilpotent",
    "KroneckerChain",
    "s_chain",
    "structured_apply",
]


def s_base(b: int) -> Matrix:
    """b x b lower-triangular seed: entry (j,k) = binom_rising(j-k, x)."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    return Matrix(
        [
            [binom_rising(j - k, X) if j >= k else ZERO for k in range(b)]
            for j in range(b)
        ]
    )


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with the left factor indexing the blocks."""
    return a.kron(b)


def s_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    """The depth-fold Kronecker power of s_base(b)."""
    checked_dim(b, depth, cap)
    seed = s_base(b)
    acc = seed
    for _ in range(depth - 1):
        acc = seed.kron(acc)
    return acc


def s_numeric(b: int, depth: int, x0: Rational, cap: int = DEFAULT_CAP) -> Matrix:
    """Same matrix with x evaluated at x0, built numerically (Fractions)."""
    checked_dim(b, depth, cap)
    seed = s_base(b).map(lambda p: p.eval(x0))
    acc = seed
    for _ in range(depth - 1):
        acc = seed.kron(acc)
    return acc


def s_entry(b: int, depth: int, j: int, k: int) -> Polynomial:
    """Closed-form entry: prod_i binom_rising(d_i(j-k), x) when the digits of
    k sit below those of j, else 0."""
    dim = checked_dim(b, depth, cap=max(DEFAULT_CAP, b**depth))
    if not (0 <= j < dim and 0 <= k < dim):
        raise IndexError(f"entry ({j},{k}) out of range for dimension {dim}")
    if not dominates(k, j, b):
        return ZERO
    acc = ONE
    for d in to_digits(j - k, b).digits:
        acc = acc * binom_rising(d, X)
    return acc


def verify_one_parameter(
    b: int, depth: int, cap: int = DEFAULT_CAP
) -> tuple[bool, Optional[tuple]]:
    """Check S(x) S(y) == S(x+y) entrywise as bivariate polynomials.

    Returns (True, None) or (False, (j, k, product_entry, target_entry)).
    """
    s_x = s_matrix(b, depth, cap)
    s_y = s_x.map(lambda p: p.compose(px=Y))
    s_sum = s_x.map(lambda p: p.compose(px=X + Y))
    prod = s_x * s_y
    for j in range(prod.nrows):
        for k in range(prod.ncols):
            if prod[j, k] != s_sum[j, k]:
                return False, (j, k, prod[j, k], s_sum[j, k])
    return True, None


def _padded_digits(n: int, b: int, width: int) -> list[int]:
    d = list(to_digits(n, b).digits)
    return d + [0] * (width - len(d))


def digital_binomial_sides(n: int, b: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the digit-product expansion of n in base b.

    Left: prod_i binom_rising(d_i(n), x+y). Right: sum over all m whose
    digits sit below n's, of the split product in x and y.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    width = len(to_digits(n, b).digits)
    xy = X + Y
    lhs = ONE
    for d in to_digits(n, b).digits:
        lhs = lhs * binom_rising(d, xy)
    rhs = ZERO
    for m in dominated_set(n, b):
        dm = _padded_digits(m, b, width)
        dn = _padded_digits(n, b, width)
        term = ONE
        for dmi, dni in zip(dm, dn):
            term = term * binom_rising(dmi, X) * binom_rising(dni - dmi, Y)
        rhs = rhs + term
    return lhs, rhs


def multiplicity_identity_sides(n: int, b: int) -> tuple[Polynomial, Polynomial]:
    """Regrouped form of digital_binomial_sides: factors collected by digit
    value j with exponent = multiplicity of j. The j = 0 factor is 1."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    xy = X + Y
    lhs = ONE
    for j in range(1, b):
        lhs = lhs * binom_rising(j, xy) ** multiplicity(n, j, b)
    rhs = ZERO
    for m in dominated_set(n, b):
        term = ONE
        for j in range(1, b):
            term = term * binom_rising(j, X) ** multiplicity(m, j, b)
            term = term * binom_rising(j, Y) ** multiplicity(n - m, j, b)
        rhs = rhs + term
    return lhs, rhs


def gould_check(
    n: int, x0: Optional[Rational] = None, y0: Optional[Rational] = None
) -> bool:
    """Convolution identity
    sum_k C(x+k, k) C(y+n-k, n-k) == C(x+y+n+1, n),
    checked symbolically, or at a rational point when x0/y0 are given."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    lhs = ZERO
    for k in range(n + 1):
        # C(x+k, k) is the rising binomial in x+1
        lhs = lhs + binom_rising(k, X + 1) * binom_rising(n - k, Y + 1)
    rhs = binom_rising(n, X + Y + 2)
    if x0 is None and y0 is None:
        return lhs == rhs
    px = Fraction(x0) if x0 is not None else 0
    py = Fraction(y0) if y0 is not None else 0
    return lhs.eval(px, py) == rhs.eval(px, py)


def shifted_gould_check(p: int, q: int) -> bool:
    """Shifted-index form:
    sum_{v=q}^{p} C(x+p-v-1, p-v) C(y+v-q-1, v-q) == C(x+y+p-q-1, p-q)."""
    if not 1 <= q <= p:
        raise ValueError(f"need 1 <= q <= p, got p={p}, q={q}")
    lhs = ZERO
    for v in range(q, p + 1):
        lhs = lhs + binom_rising(p - v, X) * binom_rising(v - q, Y)
    rhs = binom_rising(p - q, X + Y)
    return lhs == rhs


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k): coefficient of x^k
    in x(x+1)...(x+n-1), equivalently n-permutations with k cycles."""
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"need k <= n, got n={n}, k={k}")
    # row DP on c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j)
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for j, c in enumerate(row):
            new[j] += (m - 1) * c
            new[j + 1] += c
        row = new
    return row[k]


def stirling_identity_check(l: int, n: int) -> bool:
    """sum_{i=1}^{l-n+1} (i-1)! C(l,i) c(l-i, n-1) == n c(l, n), exactly."""
    if not 1 <= n <= l:
        raise ValueError(f"need 1 <= n <= l, got l={l}, n={n}")
    lhs = sum(
        factorial(i - 1) * comb(l, i) * stirling_first(l - i, n - 1)
        for i in range(1, l - n + 2)
    )
    return lhs == n * stirling_first(l, n)


def x_base(b: int) -> Matrix:
    """Strictly lower-triangular generator seed: entry (j,k) = x/(j-k)."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    return Matrix(
        [
            [X.scale(Fraction(1, j - k)) if j > k else ZERO for k in range(b)]
            for j in range(b)
        ]
    )


def x_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    """Kronecker sum of depth copies of x_base(b):
    X_{N+1} = X_1 (x) I + I (x) X_N. Strictly lower-triangular."""
    checked_dim(b, depth, cap)
    seed = x_base(b)
    acc = seed
    for _ in range(depth - 1):
        dim = acc.nrows
        eye_b = Matrix.identity(b, one=ONE, zero=ZERO)
        eye_d = Matrix.identity(dim, one=ONE, zero=ZERO)
        acc = seed.kron(eye_d) + eye_b.kron(acc)
    return acc


def x_power_entry_check(b: int, n: int) -> bool:
    """Compare x_base(b)^n against its closed form
    (n!/(j-k)!) c(j-k, n) x^n for j >= k+n, zero elsewhere."""
    if not 1 <= n <= b - 1:
        raise ValueError(f"need 1 <= n <= b-1, got b={b}, n={n}")
    power = x_base(b).power(n)
    xn = X**n
    for j in range(b):
        for k in range(b):
            if j - k >= n:
                coeff = Fraction(factorial(n), factorial(j - k)) * stirling_first(
                    j - k, n
                )
                expected = xn.scale(coeff)
            else:
                expected = ZERO
            if power[j, k] != expected:
                return False
    return True


def matrix_exp_nilpotent(x_mat: Matrix, nilpotency_bound: Optional[int] = None) -> Matrix:
    """exp of a strictly lower-triangular matrix: sum_{n<=bound} X^n / n!.

    The default bound dim-1 always suffices; a smaller known bound saves work.
    """
    if x_mat.nrows != x_mat.ncols:
        raise ValueError("matrix exponential requires a square matrix")
    if not x_mat.is_lower_triangular(strict=True):
        raise ValueError("matrix is not strictly lower-triangular")
    bound = x_mat.nrows - 1 if nilpotency_bound is None else nilpotency_bound
    result = Matrix.identity(x_mat.nrows, one=ONE, zero=ZERO)
    term = result
    for n in range(1, bound + 1):
        term = term * x_mat * Fraction(1, n)
        if all(e == 0 for row in term.rows for e in row):
            break
        result = result + term
    return result


@dataclass(frozen=True)
class KroneckerChain:
    """A Kronecker power held as (factor, depth) without materializing it."""

    base_factor: Matrix
    depth: int

    def __post_init__(self):
        if self.base_factor.nrows != self.base_factor.ncols:
            raise ValueError("chain factor must be square")
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")

    @property
    def dim(self) -> int:
        return self.base_factor.nrows**self.depth


def s_chain(b: int, depth: int, x0: Rational, cap: int = DEFAULT_CAP) -> KroneckerChain:
    """Chain form of s_numeric(b, depth, x0)."""
    checked_dim(b, depth, cap)
    factor = s_base(b).map(lambda p: p.eval(x0))
    return KroneckerChain(factor, depth)


def structured_apply(chain: KroneckerChain, vec: Sequence) -> list:
    """Multiply the chain's Kronecker power into vec, factor by factor.

    Each round applies the factor along one digit position of the index and
    rotates that position out; depth rounds restore the original layout.
    Cost is O(depth * b * dim) coefficient operations instead of O(dim^2).
    """
    b = chain.base_factor.nrows
    if len(vec) != chain.dim:
        raise ValueError(
            f"vector length {len(vec)} does not match dimension {chain.dim}"
        )
    a = chain.base_factor.rows
    v = list(vec)
    m = chain.dim // b
    for _ in range(chain.depth):
        out = [None] * len(v)
        for j in range(m):
            col = [v[t * m + j] for t in range(b)]
            base = j * b
            for i in range(b):
                arow = a[i]
                out[base + i] = sum(arow[t] * col[t] for t in range(b))
        v = out
    return v
