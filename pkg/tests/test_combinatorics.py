from itertools import combinations, permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from parkvol.combinatorics import (
    CapExceeded,
    a_of_composition,
    alternating_subset,
    beta,
    beta_bruteforce,
    comp_of_subset,
    composition_of_avector,
    descent_set,
    dominates,
    euler_bruteforce,
    euler_number,
    kappa_enumerate,
    multinomial,
    subset_of_avector,
    weak_compositions,
)


@pytest.mark.parametrize(
    "n, S, expected",
    [
        (7, {2, 3, 4}, (1, 1, 3, 2)),
        (5, {4}, (1, 3, 1)),
        (2, set(), (1, 1)),
        (1, set(), (1,)),
    ],
)
def test_comp_of_subset(n, S, expected):
    assert comp_of_subset(n, S) == expected
    assert sum(expected) == n


@pytest.mark.parametrize("S", [{1}, {1, 3}, {0}, {7}])
def test_comp_of_subset_rejects(S):
    with pytest.raises(ValueError):
        comp_of_subset(7, S)


def test_a_of_composition():
    assert a_of_composition((1, 1, 3, 2)) == (1, 2, 3, 3, 3, 4, 4)
    assert a_of_composition((1, 3, 1)) == (1, 2, 2, 2, 3)
    assert a_of_composition((4,)) == (1, 1, 1, 1)


def test_subset_of_avector():
    assert subset_of_avector((1, 2, 3, 3, 3, 4, 4)) == {2, 3, 4}
    assert subset_of_avector((1, 2, 3, 4, 5, 6)) == {2, 4}
    assert subset_of_avector((1, 1, 1)) == {1, 2}


def test_composition_of_avector_inverts_and_pads_gaps():
    assert composition_of_avector((1, 2, 2, 2, 3)) == (1, 3, 1)
    assert composition_of_avector((1, 3, 3)) == (1, 0, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_comp_and_subset_round_trip(n):
    for r in range(n):
        for S in combinations(range(2, n), r):
            assert subset_of_avector(a_of_composition(comp_of_subset(n, S))) == set(S)


def test_beta_examples():
    assert beta(2, set()) == 1
    assert beta(4, {2}) == 5
    assert beta(3, {1}) == 2


def test_beta_bruteforce_examples():
    # hand count: 213 and 312 for (3, {1})
    assert beta_bruteforce(3, {1}) == 2
    assert beta_bruteforce(1, set()) == 1
    assert beta_bruteforce(4, {1, 2, 3}) == 1
    assert beta_bruteforce(4, {2}) == 5
    with pytest.raises(CapExceeded):
        beta_bruteforce(9, set())


@pytest.mark.parametrize("n", range(1, 9))
def test_beta_matches_bruteforce_and_sums_to_factorial(n):
    total = 0
    for r in range(n):
        for S in combinations(range(1, n), r):
            b = beta(n, S)
            assert b == beta_bruteforce(n, S)
            total += b
    assert total == factorial(n)


def test_euler_numbers():
    assert [euler_number(n) for n in range(9)] == [1, 1, 1, 2, 5, 16, 61, 272, 1385]


@pytest.mark.parametrize("n", range(1, 9))
def test_euler_matches_bruteforce_and_beta(n):
    assert euler_number(n) == euler_bruteforce(n) == beta(n, alternating_subset(n))


def test_kappa_131_listing():
    assert list(kappa_enumerate((1, 3, 1))) == [
        (1, 3, 1), (1, 4, 0), (2, 2, 1), (2, 3, 0), (3, 1, 1),
        (3, 2, 0), (4, 0, 1), (4, 1, 0), (5, 0, 0),
    ]


def test_kappa_small():
    assert list(kappa_enumerate((1, 1))) == [(1, 1), (2, 0)]
    assert list(kappa_enumerate((4,))) == [(4,)]
    assert list(kappa_enumerate((0, 2))) == [(0, 2), (1, 1), (2, 0)]


gammas = st.lists(st.integers(0, 3), min_size=1, max_size=5).filter(lambda g: sum(g) <= 8)


@given(gammas)
def test_kappa_equals_filtered_weak_compositions(gamma):
    got = list(kappa_enumerate(gamma))
    brute = [a for a in weak_compositions(sum(gamma), len(gamma)) if dominates(a, gamma)]
    assert got == brute
    assert len(set(got)) == len(got)


def test_multinomial():
    assert multinomial(5, (1, 3, 1)) == 20
    assert multinomial(5, (5, 0, 0)) == 1
    assert multinomial(5, (2, 2, 1)) == 30
    with pytest.raises(ValueError):
        multinomial(5, (1, 1))


def test_descent_set():
    assert descent_set((1, 2, 3)) == set()
    assert descent_set((1, 3, 2, 4)) == {2}
    assert descent_set((3, 2, 1)) == {1, 2}
    with pytest.raises(ValueError):
        descent_set((1, 1, 2))


@given(st.permutations(range(1, 7)))
def test_descent_set_matches_definition(sigma):
    D = descent_set(sigma)
    assert all((sigma[i - 1] > sigma[i]) == (i in D) for i in range(1, 6))


def test_all_permutations_counted_once():
    n = 5
    seen = {}
    for sigma in permutations(range(1, n + 1)):
        D = descent_set(sigma)
        seen[D] = seen.get(D, 0) + 1
    assert all(beta(n, D) == c for D, c in seen.items())
