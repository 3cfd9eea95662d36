import abc
import logging
import threading
import traceback
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from ..exceptions import FamilyRuleException
from ..upsilon.knot_sum import TorusKnotSum, vanishing_combination
from .a_tuple import Comparison
from .certificate import Certificate, CertificateLog, DominationFact, Goal, Relation, Step, StepKind, require_holds
from .checks import Hypothesis
from .classes import Bracket
from .proposition import CertificateBuilder

Member = tuple[int, int, int] # (p, q, k)

class FamilyRule(abc.ABC):
    """Produces the parameters (p_i, q_i, k_i) of the family members."""
    name: str

    @abc.abstractmethod
    def members(self, count: int) -> list[Member]:
        raise NotImplementedError("Must be implemented by subclasses!")


class DefaultRule(FamilyRule):
    """p_i = 3^i + 1, q_i = 2*3^i + 3, k_i = 1."""
    name = "default"

    def members(self, count: int) -> list[Member]:
        return [(3 ** i + 1, 2 * 3 ** i + 3, 1) for i in range(1, count + 1)]


class DoublingRule(FamilyRule):
    """p_1 given, q_i = 2 p_i + 1, p_{i+1} = q_i, constant k."""
    name = "doubling"
    p1: int
    k: int

    def __init__(self, p1: int = 4, k: int = 1) -> None:
        self.p1 = p1
        self.k = k

    def members(self, count: int) -> list[Member]:
        out: list[Member] = []
        p = self.p1
        for _ in range(count):
            out.append((p, 2 * p + 1, self.k))
            p = 2 * p + 1
        return out


class ExplicitRule(FamilyRule):
    """A fixed list of members, e.g. read back from a stored certificate."""
    name = "explicit"
    _members: list[Member]

    def __init__(self, members: Sequence[Sequence[int]]) -> None:
        self._members = [(int(p), int(q), int(k)) for p, q, k in members]

    def members(self, count: int) -> list[Member]:
        return self._members[:count]


RULES: dict[str, type[FamilyRule]] = {
    DefaultRule.name: DefaultRule,
    DoublingRule.name: DoublingRule,
}

def validate_members(members: list[Member]) -> None:
    """
    Raises:
        FamilyRuleException: At the first member violating gcd(p,q) = 1,
                             4 <= p < q/2, k >= 1 or q_i <= p_{i+1}.
    """
    for idx, (p, q, k) in enumerate(members, start=1):
        if gcd(p, q) != 1:
            raise FamilyRuleException(idx, "gcd(p,q) = 1", "got ({},{})".format(p, q))
        if p < 4:
            raise FamilyRuleException(idx, "p >= 4", "got p = {}".format(p))
        if not 2 * p < q:
            raise FamilyRuleException(idx, "p < q/2", "got p = {}, q = {}".format(p, q))
        if k < 1:
            raise FamilyRuleException(idx, "k >= 1", "got k = {}".format(k))
        if idx < len(members) and q > members[idx][0]:
            raise FamilyRuleException(idx, "q_i <= p_(i+1)", "q_{} = {} > p_{} = {}".format(idx, q, idx + 1, members[idx][0]))


@dataclass
class _MemberFlags:
    """Keep track of the state of a member worker thread."""
    index: int
    member: Member
    lower: Optional[Certificate] = None
    upper: Optional[Certificate] = None
    vanishing: Optional[Hypothesis] = None
    error: Optional[Exception] = None
    exit_reason: str = "Unset"


@dataclass(frozen=True)
class FamilyResult:
    members: tuple[Member, ...]
    knots: tuple[TorusKnotSum, ...]
    certificate: Certificate


class FamilyBuilder:
    """
    Builds the family K_i = T(q_i, k_i q_i + p_i) - T(p_i,q_i) - k_i T(q_i,q_i+1)
    and the certificate that [[K_1]] << [[K_2]] << ..., hence that the K_i are
    linearly independent. Per-member certificates are built in worker threads,
    at most max_workers at a time, and joined before the chain is assembled,
    in member order.
    """
    logger: logging.Logger
    parallel: bool
    max_workers: int

    def __init__(self, logger: Optional[logging.Logger] = None, parallel: bool = True, max_workers: int = 8) -> None:
        if max_workers < 1:
            raise ValueError("max_workers must be positive, got {}.".format(max_workers))
        self.logger = logger if logger is not None else logging.getLogger(__name__)
        self.parallel = parallel
        self.max_workers = max_workers

    def __run_member(self, builder: CertificateBuilder, flags: _MemberFlags,
                     slots: Optional[threading.BoundedSemaphore] = None) -> None:
        """
        Run in a separate thread to certify one member. Releases its slot when done.
        """
        p, q, k = flags.member
        try:
            flags.lower = builder.certify_proposition(p, q, k)
            flags.upper = builder.certify_upper_bound(p, q, k)
            flags.vanishing = Hypothesis.evaluate("upsilon_vanishes", terms=vanishing_combination(p, q, k).to_json())
            flags.exit_reason = "All okay."
        except Exception as e:
            flags.error = e
            flags.exit_reason = "Error certifying member."
            self.logger.debug("Error certifying member {}: {}".format(flags.index, e))
            self.logger.debug("\n".join(traceback.format_exception(type(e), e, e.__traceback__)))
        finally:
            if slots is not None:
                slots.release()

    def build(self, count: int, rule: FamilyRule) -> FamilyResult:
        """
        Raises:
            FamilyRuleException: If the rule emits an invalid member.
            HypothesisException: If a member certificate cannot be built.
        """
        if count < 0:
            raise ValueError("count must be nonnegative, got {}.".format(count))
        members = rule.members(count)
        if len(members) != count:
            raise FamilyRuleException(len(members) + 1, "rule yields {} members".format(count))
        validate_members(members)

        builder = CertificateBuilder(self.logger)
        slots = threading.BoundedSemaphore(self.max_workers)
        workers: list[tuple[Optional[threading.Thread], _MemberFlags]] = []
        for idx, member in enumerate(members, start=1):
            flags = _MemberFlags(index=idx, member=member)
            if self.parallel:
                slots.acquire() # at most max_workers members in flight
                thrd = threading.Thread(target=self.__run_member, args=(builder, flags, slots))
                thrd.start()
                workers.append((thrd, flags))
            else:
                self.__run_member(builder, flags)
                workers.append((None, flags))
        for thrd, flags in workers:
            if thrd is not None:
                thrd.join()
            self.logger.debug("Member {} finished. Reason: {}".format(flags.index, flags.exit_reason))
        for _, flags in workers:
            if flags.error is not None:
                raise flags.error

        knots = tuple(vanishing_combination(p, q, k) for p, q, k in members)
        log = CertificateLog()
        for (_, flags), knot in zip(workers, knots):
            log.append(Step(
                kind=StepKind.STRUCTURAL,
                lemma="upsilon-recursion",
                hypotheses=(flags.vanishing,),
                claim="Upsilon({}) = 0".format(knot),
            ))

        for idx in range(len(members) - 1):
            (p, q, _), (p_next, q_next, _) = members[idx], members[idx + 1]
            upper_block = Bracket.block(q - 1)
            lower_block = Bracket.block(p_next - 1)
            if q - 1 == p_next - 1:
                bridge = Hypothesis.evaluate("equal", lhs=list(upper_block.entries), rhs=list(lower_block.entries))
            else:
                bridge = Hypothesis.evaluate("compare", lhs=list(upper_block.entries), rhs=list(lower_block.entries),
                                             relation=Comparison.MUCH_LESS.value)
            fact = DominationFact(lhs="[[K{}]]".format(idx + 1), relation=Relation.MUCH_LESS, rhs="[[K{}]]".format(idx + 2))
            log.append(Step(
                kind=StepKind.AXIOM,
                lemma="domination-chain",
                hypotheses=(
                    Hypothesis.evaluate("at_most", lhs=q, rhs=p_next),
                    bridge,
                    Hypothesis.evaluate("equal", lhs=workers[idx][1].upper.verdict,
                                        rhs="|[[{}]]| << {}".format(knots[idx], upper_block)),
                    Hypothesis.evaluate("equal", lhs=workers[idx + 1][1].lower.verdict,
                                        rhs="[[{}]] >> {}".format(knots[idx + 1], lower_block)),
                ),
                claim="|[[K{i}]]| << {u} <= {l} << [[K{j}]], so {f}".format(i=idx + 1, j=idx + 2, u=upper_block, l=lower_block, f=fact),
                fact=fact,
            ))

        if members:
            verdict = "{}; linearly independent".format(" << ".join("[[K{}]]".format(i) for i in range(1, len(members) + 1)))
            log.append(Step(
                kind=StepKind.AXIOM,
                lemma="independence",
                hypotheses=tuple(Hypothesis.evaluate("equal", lhs=flags.lower.outputs["epsilon"], rhs=1) for _, flags in workers),
                claim="0 < [[K1]] and each [[Ki]] << [[K(i+1)]], so the K_i are linearly independent",
            ))
        else:
            verdict = "empty family; trivially independent"

        require_holds(log.steps())
        certificate = Certificate(
            goal=Goal(theorem="family", statement="the members generate a free abelian subgroup with vanishing Upsilon",
                      parameters={"members": [list(m) for m in members]}),
            steps=log.steps(),
            outputs={"knots": [str(k) for k in knots]},
            verdict=verdict,
            members=tuple(c for _, flags in workers for c in (flags.lower, flags.upper)),
        )
        self.logger.info("Certified family of {} members.".format(len(members)))
        return FamilyResult(members=tuple(members), knots=knots, certificate=certificate)


def build_family(count: int, rule: Optional[FamilyRule] = None) -> FamilyResult:
    return FamilyBuilder().build(count, rule if rule is not None else DefaultRule())
