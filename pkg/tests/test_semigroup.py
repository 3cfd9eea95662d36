import random

import pytest
from hypothesis import given, strategies as st

from TorusConcordance.exceptions import InvalidKnotException
from TorusConcordance.floer import (TorusKnot, SemigroupView, contains, brute_force_contains, gaps,
                                    counting, frobenius_number, apery_set)

from conftest import coprime_pairs

def view(p: int, q: int) -> SemigroupView:
    return SemigroupView.of(TorusKnot(p, q))


@pytest.mark.parametrize("n, expected", [(23, False), (0, True), (13, True), (-1, False), (24, True)])
def test_contains_examples(n, expected):
    assert contains(view(4, 9), n) == expected


@pytest.mark.parametrize("p, q, expected", [(2, 3, [1]), (3, 4, [1, 2, 5]), (1, 5, [])])
def test_gaps_examples(p, q, expected):
    assert gaps(view(p, q)) == expected


@pytest.mark.parametrize("p, q, m, expected", [(2, 3, 0, 0), (2, 3, 3, 2), (4, 9, 24, 12)])
def test_counting_examples(p, q, m, expected):
    assert counting(view(p, q), m) == expected


def test_counting_rejects_negative():
    with pytest.raises(ValueError):
        counting(view(2, 3), -1)


@pytest.mark.parametrize("p, q", [(4, 6), (3, 3), (5, 2), (0, 3), (-1, 4)])
def test_invalid_knots(p, q):
    with pytest.raises(InvalidKnotException):
        TorusKnot(p, q)


def test_normalized():
    assert TorusKnot.normalized(9, 4) == TorusKnot(4, 9)
    assert TorusKnot.normalized(1, 1) == TorusKnot(1, 2)
    assert TorusKnot.normalized(1, 1).is_unknot()
    with pytest.raises(InvalidKnotException):
        TorusKnot.normalized(0, 3)


def test_membership_matches_brute_force_on_random_pairs():
    rng = random.Random(20240601)
    pairs = rng.sample(coprime_pairs(2, 40), 20)
    for p, q in pairs:
        S = view(p, q)
        for n in range(-5, 2 * p * q + 1):
            assert contains(S, n) == brute_force_contains(p, q, n), (p, q, n)


@pytest.mark.parametrize("p, q", coprime_pairs(2, 40))
def test_conductor_and_genus(p, q):
    S = view(p, q)
    g = gaps(S)
    assert len(g) == S.genus == (p - 1) * (q - 1) // 2
    assert S.conductor == (p - 1) * (q - 1)
    assert max(g) == S.conductor - 1 == frobenius_number(S)
    assert counting(S, S.conductor) == S.conductor - S.genus


@pytest.mark.parametrize("p, q", [(2, 3), (3, 7), (4, 9), (5, 12)])
def test_counting_increments_by_membership(p, q):
    S = view(p, q)
    for m in range(S.conductor + 5):
        assert counting(S, m + 1) - counting(S, m) == int(contains(S, m))


def test_apery_set():
    S = view(4, 9)
    assert apery_set(S) == [0, 9, 18, 27]
    assert sorted(a % 4 for a in apery_set(S)) == [0, 1, 2, 3]


@given(st.integers(min_value=-10, max_value=500))
def test_contains_property(n):
    assert contains(view(5, 7), n) == brute_force_contains(5, 7, n)
