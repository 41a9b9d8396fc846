import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from entangle import BudgetExceededError, PermutationParseError
from entangle.combinatorics import Partition, stable_hilbert, z_lambda
from entangle.permgroup import (
    OrbitClass,
    Permutation,
    canonicalize,
    centralizer_order,
    compose,
    conjugate,
    cycle_type,
    double_cosets,
    format_tuple,
    is_transitive,
    orbits,
    parse_permutation,
    parse_tuple,
    theta,
)

from oracles import double_coset_partition, lexmin_conjugate, orbit_count_by_closure


def P(text, m=None):
    return parse_permutation(text, m)


def arrays(perms):
    return tuple(p.array_form for p in perms)


def perms_of_degree(m):
    return st.permutations(list(range(1, m + 1))).map(Permutation)


def test_parse_and_format():
    p = P("(1 3 2)(4 5)")
    assert p.images == (3, 1, 2, 5, 4)
    assert str(p) == "(1 3 2)(4 5)"
    assert str(P("()", 3)) == "()"
    assert P("(1,2)", 3) == P("(1 2)", 3)
    assert P("()").degree == 1
    assert P("(2 3)").degree == 3


@pytest.mark.parametrize("bad", ["(1 2 1)", "(1 2)(2 3)", "(0 1)", "(1 x)", "1 2", "(1 2"])
def test_parse_rejects(bad):
    with pytest.raises(PermutationParseError):
        P(bad)


def test_parse_out_of_range():
    with pytest.raises(PermutationParseError):
        P("(1 4)", 3)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([0, 1])


def test_compose_convention():
    e = Permutation.identity(3)
    s = P("(1 3)", 3)
    assert compose(e, s) == s
    assert compose(P("(1 2)"), P("(1 2)")).is_identity()
    # (a*b)(i) = a(b(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    ab = compose(P("(1 2)", 3), P("(2 3)", 3))
    assert ab.images == (2, 3, 1)
    assert str(ab) == "(1 2 3)"
    with pytest.raises(ValueError):
        compose(P("(1 2)"), P("(1 2 3)"))


def test_conjugate_examples():
    s = (P("(1 2)", 3), P("(1 2 3)"))
    assert conjugate(Permutation.identity(3), s) == s
    assert conjugate(P("(1 2)"), (P("(1 2)"),)) == (P("(1 2)"),)
    assert conjugate(P("(1 2 3)"), s) == (P("(2 3)", 3), P("(1 2 3)"))
    with pytest.raises(ValueError):
        conjugate(P("(1 2)"), s)


def test_cycle_type():
    assert cycle_type(Permutation.identity(3)) == Partition((1, 1, 1))
    assert cycle_type(P("(1 2 3)")) == (3,)
    assert cycle_type(P("(1 2)(3 4 5)")) == (3, 2)


@pytest.mark.parametrize("m", range(1, 7))
def test_centralizer_order_is_z(m):
    for a in itertools.permutations(range(1, m + 1)):
        s = Permutation(a)
        assert centralizer_order(s) == z_lambda(cycle_type(s))


def test_canonicalize_examples():
    e = (Permutation.identity(3),) * 2
    assert canonicalize(e).canonical == e
    a = canonicalize((P("(2 3)", 3), P("(1 2 3)")))
    b = canonicalize((P("(1 2)", 3), P("(1 2 3)")))
    assert a == b
    assert canonicalize((), m=4) == OrbitClass((), 4)


def test_canonicalize_matches_bruteforce_lexmin():
    rnd = random.Random(7)
    for m in range(1, 6):
        for _ in range(30):
            k = rnd.randint(1, 3)
            tup = tuple(Permutation(rnd.sample(range(1, m + 1), m)) for _ in range(k))
            assert arrays(canonicalize(tup).canonical) == lexmin_conjugate(arrays(tup))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda m: st.tuples(
        st.lists(perms_of_degree(m), min_size=1, max_size=3), perms_of_degree(m)
    )
))
def test_canonicalize_idempotent_and_orbit_constant(data):
    s, tau = data
    s = tuple(s)
    c = canonicalize(s)
    assert canonicalize(c.canonical) == c
    assert canonicalize(conjugate(tau, s)) == c


def test_canonicalize_twenty_random_conjugators():
    rnd = random.Random(3)
    s = (P("(1 2)(3 4)", 5), P("(1 2 3 4 5)"), P("(2 4)", 5))
    c = canonicalize(s)
    for _ in range(20):
        tau = Permutation(rnd.sample(range(1, 6), 5))
        assert canonicalize(conjugate(tau, s)) == c


def test_canonicalize_bound():
    with pytest.raises(BudgetExceededError):
        canonicalize((Permutation.identity(8),))
    assert canonicalize((Permutation.identity(8),), max_degree=8).m == 8


@pytest.mark.parametrize("k", range(4))
def test_orbits_m1(k):
    assert len(orbits(1, k)) == 1


def test_orbit_fixtures():
    assert len(orbits(2, 2)) == 4
    assert len(orbits(3, 2)) == 11
    assert [str(c) for c in orbits(2, 1)] == ["()", "(1 2)"]


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("r", range(1, 5))
def test_orbit_count_equals_stable_hilbert(m, r):
    classes = orbits(m, r - 1)
    assert len(classes) == stable_hilbert(m, r)
    assert len(set(classes)) == len(classes)
    assert all(canonicalize(c.canonical, m=m) == c for c in classes)


@pytest.mark.parametrize("m, k", [(3, 2), (4, 2), (3, 3)])
def test_orbit_count_independent_closure(m, k):
    assert len(orbits(m, k)) == orbit_count_by_closure(m, k)


def test_orbits_budget():
    with pytest.raises(BudgetExceededError):
        orbits(5, 3, budget=10**6)
    with pytest.raises(BudgetExceededError):
        orbits(8, 1)


def test_theta_worked_example():
    s = parse_tuple("(1 3 2);(2 3);(1 3)")
    assert theta(s) == canonicalize(parse_tuple("(1 2);(1 2 3)"))


def test_theta_diagonal_is_identity_class():
    for a in itertools.permutations(range(1, 4)):
        s = Permutation(a)
        assert theta((s, s)) == canonicalize((Permutation.identity(3),))


def test_theta_double_coset_invariance():
    rnd = random.Random(11)
    for m in range(1, 6):
        for _ in range(20):
            r = rnd.randint(1, 4)
            s = tuple(Permutation(rnd.sample(range(1, m + 1), m)) for _ in range(r))
            a = Permutation(rnd.sample(range(1, m + 1), m))
            b_inv = Permutation(rnd.sample(range(1, m + 1), m)).inverse()
            assert theta(tuple(a * p * b_inv for p in s)) == theta(s)


def test_double_coset_fixtures():
    assert len(double_cosets(1, 3)) == 1
    assert len(double_cosets(2, 2)) == 2
    assert len(double_cosets(3, 3)) == 11


@pytest.mark.parametrize("m", range(1, 4))
@pytest.mark.parametrize("r", range(1, 4))
def test_theta_bijection(m, r):
    reps = double_cosets(m, r)
    labels = double_coset_partition(m, r)
    # one representative per independently computed double coset
    assert len({labels[arrays(s)] for s in reps}) == len(reps) == len(set(labels.values()))
    images = [theta(s) for s in reps]
    assert len(set(images)) == len(images)
    assert set(images) == set(orbits(m, r - 1))


def test_double_cosets_budget():
    with pytest.raises(BudgetExceededError):
        double_cosets(5, 4, budget=10**6)


def test_format_and_parse_tuple_roundtrip():
    s = parse_tuple("(1 2);(1 2 3);()")
    assert [p.degree for p in s] == [3, 3, 3]
    assert parse_tuple(format_tuple(s), 3) == s
    assert parse_tuple("") == ()


def test_is_transitive():
    assert is_transitive((P("(1 2 3)"),), 3)
    assert not is_transitive((P("(1 2)", 3),), 3)
    assert is_transitive((), 1)
