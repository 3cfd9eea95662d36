from math import gcd

import pytest

from TorusConcordance.exceptions import HypothesisException
from TorusConcordance.floer import TorusKnot, from_torus_knot, has_prefix
from TorusConcordance.order import Branch, StepKind, decompose_torus, expected_prefix

from conftest import coprime_pairs

def test_four_nine():
    record = decompose_torus(4, 9)
    assert (record.k, record.r) == (2, 1)
    assert record.branch == Branch.REMAINDER_ONE
    assert record.prefix == (1, 3, 1, 3, 2)
    assert record.remainder.b == (2, 2, 2, 2)
    assert record.dominated_by_any_block()
    assert record.dominating_block() is None
    assert str(record.expression()) == "2[1,3,3,1] + O"


def test_nine_thirteen():
    record = decompose_torus(9, 13, "O1")
    assert (record.k, record.r) == (1, 4)
    assert record.branch == Branch.HALF_REMAINDER
    assert record.prefix == (1, 8, 1, 3, 1, 4)
    assert record.dominating_block() == 3
    assert [str(f) for f in record.facts] == ["|O1| << [1,8,8,1]", "O1 >> [1,3,3,1]"]


def test_ten_twentyone():
    record = decompose_torus(10, 21)
    assert (record.k, record.r, record.branch) == (2, 1, Branch.REMAINDER_ONE)


def test_any_remainder_branch():
    record = decompose_torus(5, 7)
    assert (record.k, record.r, record.branch) == (1, 2, Branch.ANY_REMAINDER)
    assert record.prefix == (1, 4, 1, 1)


def test_steps_are_labelled_and_hold():
    record = decompose_torus(9, 13)
    assert [s.lemma for s in record.steps] == ["semigroup-staircase", "split", "any-remainder", "half-remainder"]
    assert record.steps[0].kind == StepKind.STRUCTURAL
    assert all(s.kind == StepKind.AXIOM for s in record.steps[1:])
    assert all(h.holds for s in record.steps for h in s.hypotheses)


@pytest.mark.parametrize("p, q, precondition", [(3, 7, "p >= 4"), (5, 4, "p < q"), (4, 6, "gcd(p,q) = 1")])
def test_decompose_rejects(p, q, precondition):
    with pytest.raises(HypothesisException) as info:
        decompose_torus(p, q)
    assert info.value.precondition == precondition


@pytest.mark.parametrize("p, q", [(p, q) for p, q in coprime_pairs(4, 40)])
def test_branch_prefixes(p, q):
    k, r = divmod(q, p)
    assert has_prefix(from_torus_knot(TorusKnot(p, q)), expected_prefix(p, k, r))
    record = decompose_torus(p, q)
    assert record.k == k
    if r == 1:
        assert record.branch == Branch.REMAINDER_ONE
    elif 3 <= r and 2 * r < p:
        assert record.branch == Branch.HALF_REMAINDER
    else:
        assert record.branch == Branch.ANY_REMAINDER
