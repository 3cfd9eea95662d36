import pytest

from TorusConcordance.exceptions import InvalidStaircaseException
from TorusConcordance.floer import (TorusKnot, SemigroupView, Staircase, AlexanderExponents, from_torus_knot,
                                    alexander_exponents, alexander_polynomial, semigroup_alexander_polynomial,
                                    a_tuple, max_entry_bound, has_prefix)
from TorusConcordance.order import ATuple, Condition

from conftest import coprime_pairs

@pytest.mark.parametrize("p, q, expected", [
    (2, 3, (1, 1)),
    (3, 4, (1, 2, 2, 1)),
    (4, 9, (1, 3, 1, 3, 2, 2, 2, 2, 3, 1, 3, 1)),
    (1, 5, ()),
])
def test_from_torus_knot_examples(p, q, expected):
    assert from_torus_knot(TorusKnot(p, q)).b == expected


@pytest.mark.parametrize("b, expected", [((1, 1), (0, 1, 2)), ((1, 2, 2, 1), (0, 1, 3, 5, 6)), ((), (0,))])
def test_alexander_exponents_examples(b, expected):
    assert alexander_exponents(Staircase(b)).alpha == expected


@pytest.mark.parametrize("b", [(1,), (1, 2), (0, 0), (1, -1, -1, 1)])
def test_invalid_staircases(b):
    with pytest.raises(InvalidStaircaseException):
        Staircase(b)


def test_invalid_exponents():
    with pytest.raises(InvalidStaircaseException):
        AlexanderExponents((0, 2, 1))
    with pytest.raises(InvalidStaircaseException):
        AlexanderExponents((1, 2, 3))


def test_a_tuple():
    assert a_tuple(Staircase((1, 2, 2, 1))) == ATuple((1, 2, 2, 1))
    assert a_tuple(Staircase((1, 1))).condition == Condition.ALL_POSITIVE
    with pytest.raises(InvalidStaircaseException):
        a_tuple(Staircase(()))


@pytest.mark.parametrize("p, q", [(4, 9), (2, 3), (9, 13)])
def test_max_entry_bound_examples(p, q):
    assert max_entry_bound(TorusKnot(p, q))


def test_has_prefix_examples():
    assert has_prefix(from_torus_knot(TorusKnot(4, 9)), (1, 3, 1, 3))
    assert has_prefix(from_torus_knot(TorusKnot(9, 13)), (1, 8, 1, 3, 1, 4))
    assert not has_prefix(Staircase((1, 1)), (2,))


@pytest.mark.parametrize("p, q", coprime_pairs(2, 40))
def test_staircase_suite(p, q):
    knot = TorusKnot(p, q)
    s = from_torus_knot(knot)
    S = SemigroupView.of(knot)
    assert s.b == s.b[::-1]
    assert all(b > 0 for b in s.b)
    assert sum(s.b) == (p - 1) * (q - 1)
    assert sum(s.b[1::2]) == (p - 1) * (q - 1) // 2
    assert max(s.b) <= p - 1
    assert alexander_polynomial(alexander_exponents(s)) == semigroup_alexander_polynomial(S)
