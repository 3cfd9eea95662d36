import pytest

from TorusConcordance.exceptions import HypothesisException, InvalidStaircaseException
from TorusConcordance.floer import Staircase, TorusKnot, from_torus_knot
from TorusConcordance.order import Bracket, ClassExpr, Remainder, peel, join, split

@pytest.mark.parametrize("b, n, k, remainder", [
    ((1, 3, 1, 3, 2, 2, 2, 2, 3, 1, 3, 1), 3, 2, (2, 2, 2, 2)),
    ((1, 1), 1, 0, (1, 1)),
    ((1, 5, 5, 1), 5, 1, ()),
])
def test_peel_examples(b, n, k, remainder):
    result = peel(b, n)
    assert result.k == k
    assert result.remainder.b == remainder


def test_peel_rejects():
    with pytest.raises(HypothesisException):
        peel((1, 3, 3, 1), 0)
    # middle entry 4 exceeds n = 3
    with pytest.raises(HypothesisException) as info:
        peel((1, 3, 4, 4, 3, 1), 3)
    assert "b_3 = 4" in str(info.value)


@pytest.mark.parametrize("p, q", [(4, 9), (9, 13), (10, 21), (5, 7)])
def test_join_inverts_peel(p, q):
    s = from_torus_knot(TorusKnot(p, q))
    result = peel(s, p - 1)
    assert join(result.k, result.n, result.remainder) == s


def test_peel_expression():
    result = peel((1, 3, 1, 3, 2, 2, 2, 2, 3, 1, 3, 1), 3)
    assert str(result.expression()) == "2[1,3,3,1] + [2,2,2,2]"
    assert str(result.expression("O")) == "2[1,3,3,1] + O"
    assert str(peel((1, 5, 5, 1), 5).expression()) == "[1,5,5,1]"


def test_split():
    assert split((1, 3), (2,)) == ClassExpr.of(Bracket((1, 3, 3, 1))) + ClassExpr.of(Bracket((2, 2)))
    with pytest.raises(HypothesisException):
        split((1, 3), (4,))
    with pytest.raises(HypothesisException):
        split((1,), (1,))
    with pytest.raises(HypothesisException):
        split((1, 3), ())


def test_bracket():
    assert str(Bracket.block(8)) == "[1,8,8,1]"
    assert Bracket.block(3).a_tuple().entries == (1, 3, 3, 1)
    with pytest.raises(InvalidStaircaseException):
        Bracket(())
    with pytest.raises(InvalidStaircaseException):
        Bracket((1, 2))


def test_class_expr_arithmetic():
    block = Bracket.block(3)
    expr = 2 * ClassExpr.of(block) + ClassExpr.of(Remainder("O1")) - ClassExpr.of(Remainder("O2"))
    assert str(expr) == "2[1,3,3,1] + O1 - O2"
    assert expr.coefficient(block) == 2
    assert (expr - expr).is_zero()
    assert str(ClassExpr()) == "0"
    assert str(-ClassExpr.of(block)) == "-[1,3,3,1]"
