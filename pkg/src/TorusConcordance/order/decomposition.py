import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from ..exceptions import HypothesisException
from ..floer.semigroup import TorusKnot
from ..floer.staircase import Staircase, from_torus_knot, has_prefix
from .a_tuple import Comparison
from .certificate import DominationFact, Relation, Step, StepKind, require_holds
from .checks import Hypothesis
from .classes import Bracket, ClassExpr, Remainder, peel

class Branch(str, enum.Enum):
    REMAINDER_ONE = "remainder-one" # q = kp + 1
    ANY_REMAINDER = "any-remainder" # q = kp + r, 1 < r < p
    HALF_REMAINDER = "half-remainder" # q = kp + r, 3 <= r < p/2


@dataclass(frozen=True)
class DecompositionRecord:
    """
    [[T(p,q)]] = k[1,p-1,p-1,1] + O, with what is known about O.

    Attributes:
        knot (TorusKnot): T(p,q).
        k (int): floor(q/p).
        r (int): q mod p.
        branch (Branch): Most refined branch that applies.
        prefix (tuple[int, ...]): Verified staircase prefix of the branch.
        remainder (Staircase): The middle staircase left after peeling k blocks; O is its class.
        remainder_name (str): Name of O in class expressions.
        facts (tuple[DominationFact, ...]): Domination facts established for O.
        steps (tuple[Step, ...]): The derivation, ready to be placed in a certificate.
    """
    knot: TorusKnot
    k: int
    r: int
    branch: Branch
    prefix: tuple[int, ...]
    remainder: Staircase
    remainder_name: str
    facts: tuple[DominationFact, ...]
    steps: tuple[Step, ...]

    @property
    def p(self) -> int:
        return self.knot.p

    @property
    def block(self) -> Bracket:
        return Bracket.block(self.knot.p - 1)

    def expression(self) -> ClassExpr:
        """k[1,p-1,p-1,1] + O"""
        return ClassExpr.of(self.block, self.k) + ClassExpr.of(Remainder(self.remainder_name))

    def dominated_by_any_block(self) -> bool:
        """Whether |O| << [1,n,n,1] holds for every n >= 1."""
        return self.branch == Branch.REMAINDER_ONE

    def dominating_block(self) -> Optional[int]:
        """n with O >> [1,n,n,1] if known (half-remainder branch), else None."""
        if self.branch == Branch.HALF_REMAINDER:
            return self.r - 1
        return None


def expected_prefix(p: int, k: int, r: int) -> tuple[int, ...]:
    """(1,p-1)^k followed by (2), (1,r-1) or (1,r-1,1,p-r-1) depending on r."""
    head = (1, p - 1) * k
    if r == 1:
        return head + (2,)
    if 3 <= r and 2 * r < p:
        return head + (1, r - 1, 1, p - r - 1)
    return head + (1, r - 1)


def decompose_torus(p: int, q: int, remainder_name: str = "O") -> DecompositionRecord:
    """
    Decompose the epsilon-class of T(p,q), 4 <= p < q coprime, as
    k[1,p-1,p-1,1] + O and bound O.

    * r = 1: the staircase starts (1,p-1)^k,2 and |O| << [1,n,n,1] for every n.
    * r > 1: it starts (1,p-1)^k,1,r-1 and |O| << [1,p-1,p-1,1].
    * 3 <= r < p/2: it starts (1,p-1)^k,1,r-1,1,p-r-1 and O >> [1,r-1,r-1,1].

    The staircase prefix, the peel and the a_1/a_2 comparisons are computed; the
    imported inferences are recorded as axiom steps.

    Raises:
        HypothesisException: Naming the failed precondition.
    """
    if p < 4:
        raise HypothesisException("p >= 4", "got p = {}".format(p))
    if p >= q:
        raise HypothesisException("p < q", "got p = {}, q = {}".format(p, q))
    if gcd(p, q) != 1:
        raise HypothesisException("gcd(p,q) = 1", "got gcd({},{}) = {}".format(p, q, gcd(p, q)))
    k, r = divmod(q, p)
    if r == 0:
        raise HypothesisException("r > 0")

    knot = TorusKnot(p, q)
    staircase = from_torus_knot(knot)
    prefix = expected_prefix(p, k, r)
    if not has_prefix(staircase, prefix):
        raise HypothesisException("staircase prefix {}".format(list(prefix)),
                                  "{} starts {}".format(knot, list(staircase.b[:len(prefix)])))
    branch = Branch.REMAINDER_ONE if r == 1 else (Branch.HALF_REMAINDER if len(prefix) == 2 * k + 4 else Branch.ANY_REMAINDER)
    peeled = peel(staircase, p - 1)
    tail = list(prefix[2 * k:])
    block = Bracket.block(p - 1)
    name = remainder_name

    steps: list[Step] = []
    steps.append(Step(
        kind=StepKind.STRUCTURAL,
        lemma="semigroup-staircase",
        hypotheses=(
            Hypothesis.evaluate("coprime", a=p, b=q),
            Hypothesis.evaluate("at_least", value=p, bound=4),
            Hypothesis.evaluate("less_than", lhs=p, rhs=q),
            Hypothesis.evaluate("division", dividend=q, divisor=p, quotient=k, remainder=r),
            Hypothesis.evaluate("staircase_prefix", p=p, q=q, prefix=list(prefix)),
            Hypothesis.evaluate("max_entry_bound", p=p, q=q),
        ),
        claim="CFK({}) = St({},...)".format(knot, ",".join(str(b) for b in prefix)),
    ))
    steps.append(Step(
        kind=StepKind.AXIOM,
        lemma="split",
        hypotheses=(
            Hypothesis.evaluate("peel", p=p, q=q, n=p - 1, k=k, remainder_prefix=tail),
        ),
        claim="[[{}]] = {}, {} = [{},...]".format(knot, ClassExpr.of(block, k) + ClassExpr.of(Remainder(name)),
                                                  name, ",".join(str(b) for b in tail)),
    ))

    facts: list[DominationFact] = []
    if branch == Branch.REMAINDER_ONE:
        fact = DominationFact(lhs=name, relation=Relation.MUCH_LESS, rhs="[1,n,n,1] for every n >= 1", absolute=True)
        steps.append(Step(
            kind=StepKind.AXIOM,
            lemma="remainder-one",
            hypotheses=(
                Hypothesis.evaluate("compare", lhs=tail[:1], rhs=[1, 1, 1, 1], relation=Comparison.MUCH_LESS.value),
                Hypothesis.evaluate("compare", lhs=tail[:1], rhs=list(block.entries), relation=Comparison.MUCH_LESS.value),
            ),
            claim="a_1({}) = 2 > 1, so {}".format(name, fact),
            fact=fact,
        ))
        facts.append(fact)
    else:
        fact = DominationFact(lhs=name, relation=Relation.MUCH_LESS, rhs=str(block), absolute=True)
        steps.append(Step(
            kind=StepKind.AXIOM,
            lemma="any-remainder",
            hypotheses=(
                Hypothesis.evaluate("compare", lhs=tail[:2], rhs=list(block.entries), relation=Comparison.MUCH_LESS.value),
            ),
            claim="a({}) = ({},{},...) against {}, so {}".format(name, tail[0], tail[1], block, fact),
            fact=fact,
        ))
        facts.append(fact)
    if branch == Branch.HALF_REMAINDER:
        lower = Bracket.block(r - 1)
        fact = DominationFact(lhs=name, relation=Relation.MUCH_GREATER, rhs=str(lower))
        steps.append(Step(
            kind=StepKind.AXIOM,
            lemma="half-remainder",
            hypotheses=(
                Hypothesis.evaluate("at_least", value=r, bound=3),
                Hypothesis.evaluate("less_than_half", lhs=r, rhs=p),
                Hypothesis.evaluate("less_than", lhs=r - 1, rhs=p - r - 1),
                Hypothesis.evaluate("peel", p=p, q=q, n=p - 1, k=k, remainder_prefix=tail),
            ),
            claim="{} = [1,{},1,{},...] with {} < {}, so {}".format(name, r - 1, p - r - 1, r - 1, p - r - 1, fact),
            fact=fact,
        ))
        facts.append(fact)

    require_holds(steps)
    return DecompositionRecord(
        knot=knot, k=k, r=r, branch=branch, prefix=prefix,
        remainder=peeled.remainder, remainder_name=name,
        facts=tuple(facts), steps=tuple(steps),
    )
