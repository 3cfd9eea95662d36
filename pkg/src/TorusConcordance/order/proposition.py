import logging
from math import gcd
from typing import Optional

from ..exceptions import HypothesisException
from ..upsilon.knot_sum import TorusKnotSum, vanishing_combination
from .a_tuple import Comparison
from .certificate import Certificate, CertificateLog, DominationFact, Goal, Relation, Step, StepKind, require_holds
from .checks import Hypothesis
from .classes import Bracket, ClassExpr
from .decomposition import Branch, DecompositionRecord, decompose_torus

class CertificateBuilder:
    """
    Builds the certificates for K = T(q,kq+p) - T(p,q) - k T(q,q+1): the lower
    bound [[K]] >> [1,p-1,p-1,1] and the upper bound |[[K]]| << [1,q-1,q-1,1].
    """
    logger: logging.Logger

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self.logger = logger if logger is not None else logging.getLogger(__name__)

    def _decompositions(self, p: int, q: int, k: int) -> tuple[DecompositionRecord, DecompositionRecord, DecompositionRecord]:
        d1 = decompose_torus(q, k * q + p, "O1")
        d2 = decompose_torus(p, q, "O2")
        d3 = decompose_torus(q, q + 1, "O3")
        for record in (d1, d2, d3):
            self.logger.debug("Decomposed {} on the {} branch (k={}, r={}).".format(record.knot, record.branch.value, record.k, record.r))
        return d1, d2, d3

    def _combination_step(self, knot_sum: TorusKnotSum, k: int, d1: DecompositionRecord,
                          d2: DecompositionRecord, d3: DecompositionRecord) -> tuple[Step, ClassExpr]:
        combined = d1.expression() - d2.expression() - k * d3.expression()
        q_block = d1.block
        if combined.coefficient(q_block) != 0:
            raise HypothesisException("the [1,q-1,q-1,1] terms cancel", "left {}".format(combined))
        step = Step(
            kind=StepKind.STRUCTURAL,
            lemma="linear-combination",
            hypotheses=(
                Hypothesis.evaluate("division", dividend=d1.knot.q, divisor=d1.knot.p, quotient=k, remainder=d2.p),
                Hypothesis.evaluate("equal", lhs=d1.k - k * d3.k, rhs=0),
            ),
            claim="[[{}]] = ({}) - ({}) - {}({}) = {}".format(
                knot_sum, d1.expression(), d2.expression(), k, d3.expression(), combined),
        )
        return step, combined

    def _entry_hypotheses(self, p: int, q: int, k: int) -> tuple[Hypothesis, ...]:
        return (
            Hypothesis.evaluate("coprime", a=p, b=q),
            Hypothesis.evaluate("at_least", value=p, bound=4),
            Hypothesis.evaluate("at_least", value=k, bound=1),
        )

    def certify_proposition(self, p: int, q: int, k: int) -> Certificate:
        """
        Certificate that [[T(q,kq+p) - T(p,q) - k T(q,q+1)]] >> [1,p-1,p-1,1].

        Needs gcd(p,q) = 1, 4 <= p < q/2 and k >= 1. Also reports a_1 = 1,
        a_2 >= p-1 and epsilon = 1 for the knot.

        Raises:
            HypothesisException: If a precondition fails.
        """
        _require_common(p, q, k)
        if not 2 * p < q:
            raise HypothesisException("p < q/2", "got p = {}, q = {}".format(p, q))
        knot_sum = vanishing_combination(p, q, k)
        p_block = Bracket.block(p - 1)
        log = CertificateLog()
        log.append(Step(
            kind=StepKind.STRUCTURAL,
            lemma="preconditions",
            hypotheses=self._entry_hypotheses(p, q, k) + (Hypothesis.evaluate("less_than_half", lhs=p, rhs=q),),
            claim="gcd({p},{q}) = 1, 4 <= {p} < {q}/2, k = {k} >= 1".format(p=p, q=q, k=k),
        ))

        d1, d2, d3 = self._decompositions(p, q, k)
        if d1.branch != Branch.HALF_REMAINDER:
            raise HypothesisException("3 <= p < q/2 for {}".format(d1.knot))
        for record in (d1, d2, d3):
            log.extend(list(record.steps))
        combination, combined = self._combination_step(knot_sum, k, d1, d2, d3)
        log.append(combination)

        conclusion = DominationFact(lhs="[[{}]]".format(knot_sum), relation=Relation.MUCH_GREATER, rhs=str(p_block))
        log.append(Step(
            kind=StepKind.AXIOM,
            lemma="domination-definition",
            hypotheses=(
                Hypothesis.evaluate("equal", lhs=d1.dominating_block(), rhs=p - 1),
                Hypothesis.evaluate("equal", lhs=d2.p - 1, rhs=p - 1),
                Hypothesis.evaluate("equal", lhs=d3.branch.value, rhs=Branch.REMAINDER_ONE.value),
            ),
            claim="O1 >> {b} while |O2| << {b} and |O3| << {b}, so {c} >> {b}".format(b=p_block, c=combined),
            fact=conclusion,
        ))
        log.append(Step(
            kind=StepKind.AXIOM,
            lemma="epsilon-sign",
            hypotheses=(Hypothesis.evaluate("positive_class", entries=list(p_block.entries)),),
            claim="{} > 0, so [[{}]] > 0 and epsilon = 1".format(p_block, knot_sum),
        ))
        log.append(Step(
            kind=StepKind.AXIOM,
            lemma="a-tuple-bound",
            hypotheses=(Hypothesis.evaluate("equal", lhs=[1, p - 1], rhs=list(p_block.entries[:2])),),
            claim="[[{}]] >> {} gives a_1 = 1 and a_2 >= {}".format(knot_sum, p_block, p - 1),
        ))

        require_holds(log.steps())
        certificate = Certificate(
            goal=Goal(theorem="proposition", statement=str(conclusion), parameters={"p": p, "q": q, "k": k}),
            steps=log.steps(),
            outputs={
                "knot": str(knot_sum),
                "terms": knot_sum.to_json(),
                "dominates": str(p_block),
                "epsilon": 1,
                "a1": 1,
                "a2_lower_bound": p - 1,
            },
            verdict=str(conclusion),
        )
        self.logger.info("Certified {}".format(certificate.verdict))
        return certificate

    def certify_upper_bound(self, p: int, q: int, k: int) -> Certificate:
        """
        Certificate that [[T(q,kq+p) - T(p,q) - k T(q,q+1)]] is dominated by
        [1,q-1,q-1,1]. Needs gcd(p,q) = 1, 4 <= p < q and k >= 1.

        Raises:
            HypothesisException: If a precondition fails.
        """
        _require_common(p, q, k)
        knot_sum = vanishing_combination(p, q, k)
        p_block = Bracket.block(p - 1)
        q_block = Bracket.block(q - 1)
        log = CertificateLog()
        log.append(Step(
            kind=StepKind.STRUCTURAL,
            lemma="preconditions",
            hypotheses=self._entry_hypotheses(p, q, k) + (Hypothesis.evaluate("less_than", lhs=p, rhs=q),),
            claim="gcd({p},{q}) = 1, 4 <= {p} < {q}, k = {k} >= 1".format(p=p, q=q, k=k),
        ))

        d1, d2, d3 = self._decompositions(p, q, k)
        for record in (d1, d2, d3):
            log.extend(list(record.steps))

        upgrade = DominationFact(lhs=str(p_block), relation=Relation.MUCH_LESS, rhs=str(q_block))
        log.append(Step(
            kind=StepKind.AXIOM,
            lemma="a1-a2-comparison",
            hypotheses=(Hypothesis.evaluate("compare", lhs=list(p_block.entries), rhs=list(q_block.entries),
                                            relation=Comparison.MUCH_LESS.value),),
            claim="a_1 equal, a_2: {} < {}, so {}".format(p - 1, q - 1, upgrade),
            fact=upgrade,
        ))
        for record in (d2, d3):
            fact = DominationFact(lhs=record.remainder_name, relation=Relation.MUCH_LESS, rhs=str(q_block), absolute=True)
            log.append(Step(
                kind=StepKind.AXIOM,
                lemma="domination-transitive",
                hypotheses=(Hypothesis.evaluate("less_than", lhs=p - 1, rhs=q - 1),),
                claim="|{}| << {} << {}, so {}".format(record.remainder_name, p_block, q_block, fact),
                fact=fact,
            ))
        combination, combined = self._combination_step(knot_sum, k, d1, d2, d3)
        log.append(combination)

        conclusion = DominationFact(lhs="[[{}]]".format(knot_sum), relation=Relation.MUCH_LESS, rhs=str(q_block), absolute=True)
        log.append(Step(
            kind=StepKind.AXIOM,
            lemma="domination-definition",
            hypotheses=(
                Hypothesis.evaluate("equal", lhs=d1.p - 1, rhs=q - 1),
                Hypothesis.evaluate("compare", lhs=list(p_block.entries), rhs=list(q_block.entries),
                                    relation=Comparison.MUCH_LESS.value),
            ),
            claim="every term of {} is dominated by {}, so {}".format(combined, q_block, conclusion),
            fact=conclusion,
        ))

        require_holds(log.steps())
        certificate = Certificate(
            goal=Goal(theorem="upper_bound", statement=str(conclusion), parameters={"p": p, "q": q, "k": k}),
            steps=log.steps(),
            outputs={
                "knot": str(knot_sum),
                "terms": knot_sum.to_json(),
                "dominated_by": str(q_block),
            },
            verdict=str(conclusion),
        )
        self.logger.info("Certified {}".format(certificate.verdict))
        return certificate


def _require_common(p: int, q: int, k: int) -> None:
    if k < 1:
        raise HypothesisException("k >= 1", "got k = {}".format(k))
    if p < 4:
        raise HypothesisException("p >= 4", "got p = {}".format(p))
    if p >= q:
        raise HypothesisException("p < q", "got p = {}, q = {}".format(p, q))
    if gcd(p, q) != 1:
        raise HypothesisException("gcd(p,q) = 1", "got gcd({},{}) = {}".format(p, q, gcd(p, q)))


def certify_proposition(p: int, q: int, k: int) -> Certificate:
    return CertificateBuilder().certify_proposition(p, q, k)


def certify_upper_bound(p: int, q: int, k: int) -> Certificate:
    return CertificateBuilder().certify_upper_bound(p, q, k)
