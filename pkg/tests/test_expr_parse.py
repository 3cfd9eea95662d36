import pytest

from TorusConcordance.cli import parse, parse_knot_expression
from TorusConcordance.exceptions import KnotExpressionException
from TorusConcordance.floer import TorusKnot
from TorusConcordance.upsilon import TorusKnotSum, vanishing_combination

def test_first_family_knot():
    s = parse("T(9,13) - T(4,9) - T(9,10)")
    assert s.coefficient(TorusKnot(9, 13)) == 1
    assert s.coefficient(TorusKnot(4, 9)) == -1
    assert s.coefficient(TorusKnot(9, 10)) == -1
    assert len(s) == 3


def test_coefficients_and_whitespace():
    assert parse("2*T(4,5)") == TorusKnotSum.of(TorusKnot(4, 5), 2)
    assert parse("  2 * T ( 4 , 5 )  ") == TorusKnotSum.of(TorusKnot(4, 5), 2)
    assert parse("-T(2,3)") == TorusKnotSum.of(TorusKnot(2, 3), -1)
    assert parse("T(2,3) + 3*T(2,3) - T(3,4)") == TorusKnotSum([(TorusKnot(2, 3), 4), (TorusKnot(3, 4), -1)])


def test_zero_terms_dropped():
    assert parse("T(2,3) - T(2,3)").is_empty()
    assert parse("0").is_empty()
    assert parse("0*T(2,3)").is_empty()


@pytest.mark.parametrize("text, position, fragment", [
    ("T(4,6)", 0, "gcd(4,6)"),
    ("T(5,4)", 0, "p > q"),
    ("T(2,3) $ T(3,4)", 7, "Expected '+' or '-'"),
    ("T(2,3) +", 8, "Expected 'T'"),
    ("2 T(2,3)", 2, "Expected '*'"),
    ("T(2,)", 4, "unsigned integer"),
    ("", 0, "Expected 'T'"),
])
def test_errors(text, position, fragment):
    with pytest.raises(KnotExpressionException) as info:
        parse(text)
    assert info.value.position == position
    assert fragment in str(info.value)

    expr = parse_knot_expression(text)
    assert expr.has_error()
    assert expr.error_position() == position
    assert expr.get_knot_sum() is None


def test_non_raising_form():
    expr = parse_knot_expression("T(2,3)")
    assert not expr.has_error()
    assert expr.error_msg() is None
    assert expr.get_knot_sum() == TorusKnotSum.of(TorusKnot(2, 3))


@pytest.mark.parametrize("p, q, k", [(4, 9, 1), (10, 21, 1), (3, 5, 2)])
def test_print_parse_round_trip(p, q, k):
    s = vanishing_combination(p, q, k)
    assert parse(str(s)) == s
    assert str(parse(str(s))) == str(s)
