from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from TorusConcordance.exceptions import DomainException
from TorusConcordance.upsilon import PLFunction, add, scale, negate, eval_at

def tent() -> PLFunction:
    return PLFunction.from_points([(0, 0), (1, -1), (2, 0)])


def test_canonical_form_drops_collinear_points():
    f = PLFunction.from_points([(0, 0), (Fraction(1, 2), Fraction(-1, 2)), (1, -1), (2, 0)])
    assert f.breakpoints == (0, 1, 2)
    assert f == tent()


def test_zero():
    z = PLFunction.zero()
    assert z.is_zero()
    assert z.breakpoints == (0, 2)
    assert eval_at(z, Fraction(7, 5)) == 0


@pytest.mark.parametrize("breakpoints, values", [
    ((0,), (0,)),
    ((0, 1), (0, 0)),
    ((0, 1, 1, 2), (0, 0, 0, 0)),
    ((0, 2), (0,)),
])
def test_invalid_functions(breakpoints, values):
    with pytest.raises(ValueError):
        PLFunction(breakpoints, values)


def test_eval():
    f = tent()
    assert eval_at(f, 1) == -1
    assert eval_at(f, 0) == 0
    assert f(Fraction(1, 2)) == Fraction(-1, 2)
    for t in (Fraction(-1, 3), Fraction(21, 10)):
        with pytest.raises(DomainException):
            eval_at(f, t)


def test_group_operations():
    f = tent()
    assert add(f, negate(f)).is_zero()
    assert (f - f).is_zero()
    assert scale(0, f) == PLFunction.zero()
    assert 2 * f == f + f
    assert -f == scale(-1, f)


def test_add_merges_breakpoints():
    g = PLFunction.from_points([(0, 0), (Fraction(1, 2), 1), (2, 0)])
    h = tent() + g
    assert h.breakpoints == (0, Fraction(1, 2), 1, 2)
    assert h(Fraction(1, 2)) == Fraction(1, 2)


def test_shape_predicates():
    f = tent()
    assert f.is_convex()
    assert f.is_symmetric()
    assert not (-f).is_convex()
    assert f.slopes() == [-1, 1]


@given(st.fractions(min_value=0, max_value=2), st.fractions(min_value=0, max_value=2))
def test_addition_is_pointwise(t, u):
    f = tent()
    g = PLFunction.from_points([(0, 0), (u, u * u), (2, 0)]) if 0 < u < 2 else PLFunction.zero()
    assert (f + g)(t) == f(t) + g(t)
