"""Thue-Morse coefficient polynomials and the matrix algebra behind them.

A zero-sum coefficient tuple A feeds a polynomial F whose n-th coefficient is
A[digit_sum(n) mod b]. F factors as P * prod_{m<N} (1 - x^(b^m)); the
coefficients of P come either from dominated-digit sums or from the integer
Sierpinski matrix, and the two routes are kept separate so they can be
checked against each other. Also here: the bidiagonal factor matrix M, the
generator pair products U = S T^t and V = T^t S, their power relations, and
equal-power-sum partitions of {0, ..., b^(M+1) - 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional, Sequence

from .digits import dominated_set, parity_w, ptm, to_digits
from .matrix import DEFAULT_CAP, Matrix, checked_dim

__all__ = [
    "ZeroSumVector",
    "UniPoly",
    "m_matrix",
    "t_matrix",
    "s_int",
    "f_vector",
    "f_poly",
    "coefficients_by_formula",
    "coefficients_by_matrix",
    "one_minus_power_product",
    "verify_factorization",
    "base3_corollary_check",
    "prouhet_partition",
    "power_sums",
    "u_matrix",
    "v_matrix",
    "power_relation_check",
    "eigen_poly_annihilation_check",
    "braid_check",
    "random_zero_sum",
]


@dataclass(frozen=True)
class ZeroSumVector:
    """b exact rationals that sum to zero."""

    base: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        entries = tuple(Fraction(e) for e in self.entries)
        if len(entries) != self.base:
            raise ValueError(
                f"need {self.base} entries for base {self.base}, got {len(entries)}"
            )
        total = sum(entries)
        if total != 0:
            raise ValueError(f"entries sum to {total}, expected 0")
        object.__setattr__(self, "entries", entries)


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: UniPoly) -> UniPoly:
        longer, shorter = self.coeffs, other.coeffs
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        out = list(longer)
        for i, c in enumerate(shorter):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly) -> UniPoly:
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _kron_power(seed: Matrix, depth: int) -> Matrix:
    acc = seed
    for _ in range(depth - 1):
        acc = seed.kron(acc)
    return acc


def m_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    """Kronecker power of the bidiagonal seed (1 on the diagonal, -1 just
    below it); inverse of s_int."""
    checked_dim(b, depth, cap)
    seed = Matrix(
        [
            [1 if j == k else (-1 if j == k + 1 else 0) for k in range(b)]
            for j in range(b)
        ]
    )
    return _kron_power(seed, depth)


def t_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    return m_matrix(b, depth, cap).transpose()


def s_int(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    """Kronecker power of the lower-triangular all-ones seed; the 0/1
    dominance-pattern matrix, and the x = 1 value of the symbolic family."""
    checked_dim(b, depth, cap)
    seed = Matrix([[1 if j >= k else 0 for k in range(b)] for j in range(b)])
    return _kron_power(seed, depth)


def f_vector(b: int, depth: int, a: ZeroSumVector, cap: int = DEFAULT_CAP) -> list[Fraction]:
    """Coefficient vector (A[u(0)], A[u(1)], ..., A[u(b^depth - 1)])."""
    if a.base != b:
        raise ValueError(f"vector has base {a.base}, expected {b}")
    dim = checked_dim(b, depth, cap)
    return [a.entries[ptm(n, b)] for n in range(dim)]


def f_poly(b: int, depth: int, a: ZeroSumVector, cap: int = DEFAULT_CAP) -> UniPoly:
    return UniPoly(f_vector(b, depth, a, cap))


def coefficients_by_formula(
    b: int, depth: int, a: ZeroSumVector, cap: int = DEFAULT_CAP
) -> list[Fraction]:
    """c_n as the sum of A[u(k)] over all k whose digits sit below n's."""
    if a.base != b:
        raise ValueError(f"vector has base {a.base}, expected {b}")
    dim = checked_dim(b, depth, cap)
    return [
        sum((a.entries[ptm(k, b)] for k in dominated_set(n, b)), Fraction(0))
        for n in range(dim)
    ]


def coefficients_by_matrix(
    b: int, depth: int, a: ZeroSumVector, cap: int = DEFAULT_CAP
) -> list[Fraction]:
    """Same vector via the matrix route c = S a; kept separate from the
    dominated-sum route so the two can be cross-checked."""
    return s_int(b, depth, cap).matvec(f_vector(b, depth, a, cap))


def one_minus_power_product(b: int, depth: int) -> UniPoly:
    """prod_{m=0}^{depth-1} (1 - x^(b^m))."""
    acc = UniPoly([1])
    for m in range(depth):
        acc = acc * UniPoly([1] + [0] * (b**m - 1) + [-1])
    return acc


def verify_factorization(b: int, depth: int, a: ZeroSumVector, cap: int = DEFAULT_CAP) -> bool:
    """Exact check that F == P * prod(1 - x^(b^m)) with P built from the
    dominated-sum coefficients."""
    f = f_poly(b, depth, a, cap)
    p = UniPoly(coefficients_by_formula(b, depth, a, cap))
    return f == p * one_minus_power_product(b, depth)


def base3_corollary_check(n: int, a: ZeroSumVector) -> bool:
    """For base 3 and n with digits in {0,1}: the dominated-sum coefficient
    c_n equals (-1)^parity_w(n) * A[u(2n)]."""
    if a.base != 3:
        raise ValueError(f"vector has base {a.base}, expected 3")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if any(d == 2 for d in to_digits(n, 3).digits):
        raise ValueError(f"n = {n} contains digit 2 in base 3")
    c_n = sum((a.entries[ptm(k, 3)] for k in dominated_set(n, 3)), Fraction(0))
    sign = -1 if parity_w(n) else 1
    return c_n == sign * a.entries[ptm(2 * n, 3)]


def prouhet_partition(b: int, m_degree: int, cap: int = DEFAULT_CAP) -> list[list[int]]:
    """Split {0, ..., b^(m_degree+1) - 1} into b classes by u_b(n); the
    classes have equal power sums for exponents 0..m_degree."""
    if m_degree < 0:
        raise ValueError(f"degree must be non-negative, got {m_degree}")
    size = checked_dim(b, m_degree + 1, cap)
    sets: list[list[int]] = [[] for _ in range(b)]
    for n in range(size):
        sets[ptm(n, b)].append(n)
    return sets


def power_sums(sets: Sequence[Sequence[int]], max_degree: int) -> list[list[int]]:
    """Row m holds sum(n^m) for each class; rows 0..max_degree."""
    return [[sum(n**m for n in s) for s in sets] for m in range(max_degree + 1)]


def u_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    return s_int(b, depth, cap) * t_matrix(b, depth, cap)


def v_matrix(b: int, depth: int, cap: int = DEFAULT_CAP) -> Matrix:
    return t_matrix(b, depth, cap) * s_int(b, depth, cap)


def power_relation_check(b: int, depth: int, cap: int = DEFAULT_CAP) -> bool:
    """U^(b+1) == V^(b+1) == (-1)^(depth*(b+1)) * I, exactly."""
    dim = checked_dim(b, depth, cap)
    sign = -1 if (depth * (b + 1)) % 2 else 1
    target = Matrix.identity(dim, one=sign)
    return (
        u_matrix(b, depth, cap).power(b + 1) == target
        and v_matrix(b, depth, cap).power(b + 1) == target
    )


def eigen_poly_annihilation_check(b: int) -> bool:
    """p(r) = -1 + r - r^2 + ... + (-1)^(b+1) r^b kills both depth-1
    generator products (their eigenvalues are exactly the roots of p)."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    zero = Matrix([[0] * b for _ in range(b)])
    for mat in (u_matrix(b, 1), v_matrix(b, 1)):
        acc = Matrix.identity(b) * (-1)
        power = Matrix.identity(b)
        for j in range(1, b + 1):
            power = power * mat
            acc = acc + power * (1 if j % 2 else -1)
        if acc != zero:
            return False
    return True


def braid_check(
    b: int, depth: int, cap: int = DEFAULT_CAP
) -> tuple[bool, Optional[tuple[int, int, Fraction, Fraction]]]:
    """Does S T S == T S T? True for b = 2, false for b > 2; on failure the
    witness is (row, col, lhs, rhs) of the first row-major mismatch."""
    s = s_int(b, depth, cap)
    t = t_matrix(b, depth, cap)
    lhs = s * t * s
    rhs = t * s * t
    for i in range(lhs.nrows):
        for j in range(lhs.ncols):
            if lhs[i, j] != rhs[i, j]:
                return False, (i, j, lhs[i, j], rhs[i, j])
    return True, None


def random_zero_sum(b: int, rng: Random) -> ZeroSumVector:
    """b - 1 random small rationals plus a balancing last entry."""
    head = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(b - 1)]
    return ZeroSumVector(b, tuple(head + [-sum(head)]))
