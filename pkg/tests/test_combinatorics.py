from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from entangle.combinatorics import (
    Partition,
    partitions_of,
    stable_hilbert,
    tensor_invariant_dim_bound,
    z_lambda,
)
from entangle.permgroup import burnside_orbit_count

from oracles import brute_partitions, burnside, centralizer_size

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("m", range(9))
def test_partitions_match_brute_force(m):
    got = partitions_of(m)
    assert set(got) == brute_partitions(m)
    assert len(got) == len(set(got)) == PARTITION_NUMBERS[m]
    # reverse lexicographic
    assert got == sorted(got, reverse=True)


def test_partition_validation():
    assert Partition([3, 1]).m == 4
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        partitions_of(-1)


@given(st.integers(0, 12))
def test_partition_invariants(m):
    for lam in partitions_of(m):
        assert all(a >= b >= 1 for a, b in zip(lam, lam[1:] + (1,)))
        assert sum(lam) == m


def _cycle_type_representative(lam):
    images, start = [], 0
    for part in lam:
        images += [start + (i + 1) % part for i in range(part)]
        start += part
    return tuple(images)


@pytest.mark.parametrize("m", range(1, 7))
def test_z_lambda_is_centralizer_order(m):
    for lam in partitions_of(m):
        assert z_lambda(lam) == centralizer_size(_cycle_type_representative(lam))


def test_z_lambda_examples():
    assert z_lambda((1,)) == 1
    assert z_lambda((2, 1)) == 2
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda(()) == 1


@pytest.mark.parametrize("m", range(8))
def test_class_equation(m):
    assert sum(Fraction(factorial(m), z_lambda(lam)) for lam in partitions_of(m)) == factorial(m)


@pytest.mark.parametrize(
    "m, r, expected", [(2, 2, 2), (3, 3, 11), (2, 4, 8), (2, 3, 4), (3, 4, 49), (0, 5, 1)]
)
def test_stable_hilbert_fixtures(m, r, expected):
    assert stable_hilbert(m, r) == expected


@pytest.mark.parametrize("m", range(11))
def test_stable_hilbert_low_r(m):
    one = stable_hilbert(m, 1)
    assert one == 1 and type(one) is int
    assert stable_hilbert(m, 2) == PARTITION_NUMBERS[m]


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("r", range(1, 5))
def test_stable_hilbert_matches_burnside(m, r):
    assert stable_hilbert(m, r) == burnside(m, r - 1) == burnside_orbit_count(m, r - 1)


def test_stable_hilbert_m6_burnside():
    assert stable_hilbert(6, 3) == burnside_orbit_count(6, 2)


def test_stable_hilbert_rejects_r0():
    with pytest.raises(ValueError):
        stable_hilbert(2, 0)


def test_stable_hilbert_big_exact():
    # exceeds 64 bits
    assert stable_hilbert(12, 8) > 2**64
    assert stable_hilbert(12, 8) == sum(z_lambda(l) ** 6 for l in partitions_of(12))


def test_dim_bound():
    assert tensor_invariant_dim_bound(0, 3) == 1
    assert tensor_invariant_dim_bound(1, 2) == 2
    assert tensor_invariant_dim_bound(2, 3) == 48
    assert tensor_invariant_dim_bound(4, 2) == comb(8, 4) * 24**2
