"""Partitions, centralizer orders and the closed-form counts built on them.

Everything here is exact: integers where the answer is integral and
:class:`fractions.Fraction` only where an intermediate needs it.
"""

from collections import Counter
from fractions import Fraction
from math import comb, factorial, prod

__all__ = [
    "Partition",
    "partitions_of",
    "z_lambda",
    "stable_hilbert",
    "tensor_invariant_dim_bound",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([2, 1, 1]).m
    4
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def m(self):
        return sum(self)

    @property
    def multiplicities(self):
        """Map part size -> number of times it occurs."""
        return Counter(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def _partitions(m, largest):
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def partitions_of(m):
    """All partitions of ``m`` in reverse lexicographic order.

    The first element is ``(m,)`` and the last is ``(1,) * m``; ``m == 0``
    yields the single empty partition.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return [Partition(p) for p in _partitions(m, m)]


def z_lambda(partition):
    """Order of the centralizer in S_m of a permutation with this cycle type.

    For multiplicities a_1, a_2, ... this is prod_k k**a_k * a_k!.
    """
    partition = Partition(partition)
    return prod(k**a * factorial(a) for k, a in partition.multiplicities.items())


def stable_hilbert(m, r):
    """Stable dimension of the degree-2m local-unitary invariants on r parties.

    Sum over partitions of ``m`` of ``z_lambda ** (r - 2)``.  For ``r == 1``
    the exponent is negative and the sum is taken in rationals; it always
    comes out to exactly 1.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    exponent = r - 2
    if exponent >= 0:
        return sum(z_lambda(lam) ** exponent for lam in partitions_of(m))
    total = sum(Fraction(1, z_lambda(lam) ** -exponent) for lam in partitions_of(m))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral stable dimension {total} for m={m}, r={r}")
    return total.numerator


def tensor_invariant_dim_bound(m, r):
    """Upper bound C(2m, m) * (m!)**r on invariants in the degree-2m tensor space."""
    if m < 0 or r < 1:
        raise ValueError(f"need m >= 0 and r >= 1, got m={m}, r={r}")
    return comb(2 * m, m) * factorial(m) ** r
