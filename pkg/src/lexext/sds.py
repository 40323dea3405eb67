"""The two decompositions of an edge count that parameterize every bound.

An edge count m with 1 <= m <= C(n, 2) has a unique decreasing-run
decomposition against the base order n,

    m = (n-1) + (n-2) + ... + (n-k+1) + p_k      with 1 <= p_k <= n-k,

written sds(m, n); k is called its depth.  Dually, any positive integer x
can be written uniquely as x = C(s, 2) + t with 0 < t <= s; applied to the
complement size x = C(n, 2) - m this gives the (s, t) decomposition.  The
two are linked: s = n - k and t = n - k - p_k when p_k < n - k, and
s = t = n - k - 1 when p_k = n - k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import binom, isqrt, triangular_decompose
from .errors import DomainError


@dataclass(frozen=True)
class SdsDecomposition:
    """The unique (k, p_k) pair with m = (k-1)(2n-k)/2 + p_k.

    The full summand sequence is implicit: summand i equals n - i for
    i < k, so (k, p_k) determines it and nothing else is stored.
    """

    n: int
    m: int
    k: int
    p_k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n - 1:
            raise DomainError(f"depth k={self.k} outside 1..{self.n - 1}")
        if not 1 <= self.p_k <= self.n - self.k:
            raise DomainError(
                f"last summand p_k={self.p_k} outside 1..{self.n - self.k}"
            )


@dataclass(frozen=True)
class ErdosDecomposition:
    """The unique (s, t) pair with m_complement = C(s, 2) + t, 0 < t <= s."""

    m_complement: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if not 0 < self.t <= self.s:
            raise DomainError(f"t={self.t} outside 1..{self.s}")
        if self.s * (self.s - 1) // 2 + self.t != self.m_complement:
            raise DomainError(
                f"(s, t) = ({self.s}, {self.t}) does not sum to {self.m_complement}"
            )


def sds_decompose(n: int, m: int) -> SdsDecomposition:
    """Compute the unique decreasing-run decomposition of m with base n.

    The depth k is the smallest integer in {1, ..., n-1} satisfying
    m <= k*(2n-k-1)/2.  A closed-form candidate is taken from the exact
    integer square root of (2n-1)^2 - 8m and then corrected against the
    minimality inequalities directly; a failure of the final check would
    be a bug, not bad input.
    """
    if n < 2:
        raise DomainError(f"sds_decompose requires n >= 2, got n={n}")
    if not 1 <= m <= binom(n, 2):
        raise DomainError(
            f"sds_decompose requires 1 <= m <= C(n,2) = {binom(n, 2)}, got m={m}"
        )
    # (2n-1)^2 - 8m is 4*(1/4 + n^2 - n - 2m), positive throughout the domain.
    k = (2 * n - isqrt((2 * n - 1) ** 2 - 8 * m)) // 2
    k = min(max(k, 1), n - 1)
    while k < n - 1 and m > k * (2 * n - k - 1) // 2:
        k += 1
    while k > 1 and m <= (k - 1) * (2 * n - k) // 2:
        k -= 1
    if not (m <= k * (2 * n - k - 1) // 2 and (k == 1 or m > (k - 1) * (2 * n - k) // 2)):
        raise AssertionError(f"depth search failed for n={n}, m={m}")
    p_k = m - (k - 1) * (2 * n - k) // 2
    return SdsDecomposition(n=n, m=m, k=k, p_k=p_k)


def sds_reconstruct(d: SdsDecomposition) -> int:
    """Edge count the decomposition sums to: (k-1)(2n-k)/2 + p_k."""
    return (d.k - 1) * (2 * d.n - d.k) // 2 + d.p_k


def erdos_decompose_for_independent_sets(n: int, m: int) -> ErdosDecomposition:
    """Decompose the non-edge count C(n, 2) - m as C(s, 2) + t, 0 < t <= s.

    Requires m < C(n, 2): the complete graph has an edgeless complement and
    must be special-cased by callers.
    """
    if n < 2:
        raise DomainError(f"requires n >= 2, got n={n}")
    if not 0 <= m < binom(n, 2):
        raise DomainError(
            f"requires 0 <= m < C(n,2) = {binom(n, 2)}, got m={m}; "
            "the complete graph has no complement edges to decompose"
        )
    m_complement = binom(n, 2) - m
    s, t = triangular_decompose(m_complement)
    return ErdosDecomposition(m_complement=m_complement, s=s, t=t)
