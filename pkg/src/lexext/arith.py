"""Exact integer arithmetic behind every ceiling/floor formula in the package.

All quantities stay in arbitrary-precision integers; nothing is ever rounded
through a float.  Counts returned anywhere in the package are plain Python
ints, which never overflow silently.
"""

from __future__ import annotations

import math

from .errors import DomainError

# Counts are exact and can exceed any fixed machine width (e.g. the number
# of 20-subsets of an 80-vertex graph), so they are ordinary Python ints.
Count = int


def isqrt(x: int) -> int:
    """Floor of the square root of a non-negative integer.

    The result q satisfies q*q <= x < (q+1)*(q+1) exactly.
    """
    if x < 0:
        raise DomainError(f"isqrt requires x >= 0, got {x}")
    return math.isqrt(x)


def binom(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), with C(a, b) = 0 whenever b > a.

    The b > a convention is relied on throughout the bound formulas, e.g.
    C(1, 2) = 0 makes them degrade correctly at small arguments.
    """
    if a < 0 or b < 0:
        raise DomainError(f"binom requires non-negative arguments, got ({a}, {b})")
    return math.comb(a, b)


def triangular_decompose(x: int) -> tuple[int, int]:
    """Write x = s*(s-1)/2 + t with 0 < t <= s; the pair (s, t) is unique.

    s is the smallest positive integer with x <= s*(s+1)/2.  The initial
    guess comes from isqrt of 8*x + 1 and is then nudged by a +-1
    correction loop so boundary cases cannot be lost to rounding.
    """
    if x < 1:
        raise DomainError(f"triangular_decompose requires x >= 1, got {x}")
    s = (isqrt(8 * x + 1) - 1) // 2
    if s < 1:
        s = 1
    while s * (s + 1) // 2 < x:
        s += 1
    while s > 1 and (s - 1) * s // 2 >= x:
        s -= 1
    t = x - s * (s - 1) // 2
    if not 0 < t <= s:
        raise AssertionError(f"triangular decomposition failed for x={x}")
    return s, t


def is_exact_triangular(x: int) -> int | None:
    """Return s >= 1 with x = s*(s+1)/2 when x is a triangular number.

    Returns None otherwise, and for x = 0: the callers' convention needs
    s >= 1, and 0 = s*(s+1)/2 only for s = 0.
    """
    if x < 0:
        raise DomainError(f"is_exact_triangular requires x >= 0, got {x}")
    if x == 0:
        return None
    s = (isqrt(8 * x + 1) - 1) // 2
    if s >= 1 and s * (s + 1) // 2 == x:
        return s
    return None
