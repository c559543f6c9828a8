"""Base-b digit expansions, digit statistics, and the digital-dominance order."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


@dataclass(frozen=True)
class BaseBExpansion:
    """A non-negative integer with its base-b digits, least-significant first.

    Zero is represented with the single digit (0,), so the digit vector is
    never empty.
    """

    base: int
    value: int
    digits: tuple[int, ...]


def to_digits(n: int, b: int) -> BaseBExpansion:
    """Expand n in base b."""
    _check_base(b)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return BaseBExpansion(b, 0, (0,))
    digits = []
    m = n
    while m:
        m, d = divmod(m, b)
        digits.append(d)
    return BaseBExpansion(b, n, tuple(digits))


def digit_sum(n: int, b: int) -> int:
    """Sum of the base-b digits of n."""
    return sum(to_digits(n, b).digits)


def ptm(n: int, b: int) -> int:
    """Generalized Prouhet-Thue-Morse value: base-b digit sum of n, mod b."""
    return digit_sum(n, b) % b


def parity_w(n: int) -> int:
    """Parity of the base-3 digit sum of n."""
    return digit_sum(n, 3) % 2


def _padded_digits(m: int, n: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dm = to_digits(m, b).digits
    dn = to_digits(n, b).digits
    width = max(len(dm), len(dn))
    return dm + (0,) * (width - len(dm)), dn + (0,) * (width - len(dn))


def dominates(m: int, n: int, b: int) -> bool:
    """True iff every base-b digit of m is <= the matching digit of n."""
    dm, dn = _padded_digits(m, n, b)
    return all(x <= y for x, y in zip(dm, dn))


def carry_free(j: int, k: int, b: int) -> bool:
    """True iff adding j and k in base b produces no carries.

    Equivalent to digit_sum(j) + digit_sum(k) == digit_sum(j + k), and to
    j being digitally dominated by j + k.
    """
    return digit_sum(j, b) + digit_sum(k, b) == digit_sum(j + k, b)


def multiplicity(n: int, j: int, b: int) -> int:
    """Number of base-b digits of n equal to j, for 1 <= j <= b - 1."""
    _check_base(b)
    if not 1 <= j <= b - 1:
        raise ValueError(f"digit value must be in [1, {b - 1}], got {j}")
    return sum(1 for d in to_digits(n, b).digits if d == j)


def dominated_set(n: int, b: int) -> list[int]:
    """All k digitally dominated by n, in increasing numeric order.

    Enumerates the Cartesian product of the per-digit ranges [0, d_i], so the
    result always has prod(d_i + 1) members.
    """
    expansion = to_digits(n, b)
    weights = [b**i for i in range(len(expansion.digits))]
    ranges = [range(d + 1) for d in expansion.digits]
    values = [sum(w * c for w, c in zip(weights, combo)) for combo in product(*ranges)]
    return sorted(values)
