"""Exact integer arithmetic: binomials, binomial-row gcds, prime powers, Bezout.

Integers are plain Python ``int`` (arbitrary precision); rationals elsewhere in
the package are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


@dataclass(frozen=True)
class PrimePowerClassification:
    is_prime_power: bool
    p: int | None = None
    exponent: int | None = None

    def __str__(self) -> str:
        if not self.is_prime_power:
            return "NotPrimePower"
        return f"PrimePower({self.p}, {self.exponent})"


NOT_PRIME_POWER = PrimePowerClassification(False)


def binomial(n: int, j: int) -> int:
    """C(n, j), with C(n, j) = 0 for j < 0 or j > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got {n}")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def gcd_row_binomials(n: int) -> int:
    """gcd of C(n, j) for 1 <= j <= n-1."""
    if n < 2:
        raise DomainError(f"gcd_row_binomials needs n >= 2, got {n}")
    g = 0
    c = 1
    # the row is symmetric, half of it suffices
    for j in range(1, n // 2 + 1):
        c = c * (n - j + 1) // j
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def prime_power_classify(n: int) -> PrimePowerClassification:
    if n < 2:
        raise DomainError(f"prime_power_classify needs n >= 2, got {n}")
    p = None
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return PrimePowerClassification(True, n, 1)
    m, s = n, 0
    while m % p == 0:
        m //= p
        s += 1
    if m != 1:
        return NOT_PRIME_POWER
    return PrimePowerClassification(True, p, s)


def restricted_gcd_d(k: int) -> int:
    """gcd of 2k+1 and C(2k+1, 2k+1-j) for 4 <= j <= 2k-1.

    These are the s-numbers (up to sign) of CP^{2k} and of the Milnor
    manifolds H_{i,j} with i + j = 2k+1, i >= 2, j >= 4.
    """
    if k < 3:
        raise DomainError(f"restricted_gcd_d needs k >= 3, got {k}")
    n = 2 * k + 1
    return reduce(math.gcd, (binomial(n, n - j) for j in range(4, 2 * k)), n)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a*x + b*y = g >= 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def extended_gcd_list(values: list[int]) -> tuple[int, list[int]]:
    """Return ``(g, coeffs)`` with ``g = gcd(values) > 0`` and ``sum(c*v) == g``.

    An entry whose value is already a multiple of the running gcd gets
    coefficient 0, so a leading entry that alone achieves the gcd yields a
    certificate supported on that entry only.
    """
    if not values:
        raise DomainError("extended_gcd_list needs a nonempty list")
    if any(v == 0 for v in values):
        raise DomainError("extended_gcd_list entries must be nonzero")
    g = abs(values[0])
    coeffs = [1 if values[0] > 0 else -1]
    for v in values[1:]:
        if v % g == 0:
            coeffs.append(0)
            continue
        g, x, y = _egcd(g, v)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
    return g, coeffs
