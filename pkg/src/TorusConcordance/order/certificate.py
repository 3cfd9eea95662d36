import enum
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from ..exceptions import HypothesisException
from .checks import Hypothesis

class StepKind(str, enum.Enum):
    STRUCTURAL = "structural" # every hypothesis machine-checked
    AXIOM = "axiom" # an imported result; its computable hypotheses are checked


class Relation(str, enum.Enum):
    MUCH_LESS = "<<"
    MUCH_GREATER = ">>"


@dataclass(frozen=True)
class DominationFact:
    """
    lhs << rhs or lhs >> rhs in the ordered group of epsilon-classes. With
    absolute=True the fact reads |lhs| << rhs, i.e. rhs dominates lhs.
    """
    lhs: str
    relation: Relation
    rhs: str
    absolute: bool = False

    def __str__(self) -> str:
        lhs = "|{}|".format(self.lhs) if self.absolute else self.lhs
        return "{} {} {}".format(lhs, self.relation.value, self.rhs)

    def to_json(self) -> dict[str, Any]:
        return {"lhs": self.lhs, "relation": self.relation.value, "rhs": self.rhs, "absolute": self.absolute}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "DominationFact":
        return cls(lhs=data["lhs"], relation=Relation(data["relation"]), rhs=data["rhs"], absolute=data["absolute"])


@dataclass(frozen=True)
class Step:
    """
    One derivation step.

    Attributes:
        kind (StepKind): structural or axiom.
        lemma (str): Tag of the rule applied, e.g. "any-remainder".
        hypotheses (tuple[Hypothesis, ...]): Re-checkable hypotheses.
        claim (str): Human-readable statement of what the step establishes.
        fact (Optional[DominationFact]): The domination fact established, if any.
    """
    kind: StepKind
    lemma: str
    hypotheses: tuple[Hypothesis, ...]
    claim: str
    fact: Optional[DominationFact] = None

    def to_json(self) -> dict[str, Any]:
        out = {
            "kind": self.kind.value,
            "lemma": self.lemma,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "claim": self.claim,
        }
        if self.fact is not None:
            out["fact"] = self.fact.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Step":
        return cls(
            kind=StepKind(data["kind"]),
            lemma=data["lemma"],
            hypotheses=tuple(Hypothesis.from_json(h) for h in data["hypotheses"]),
            claim=data["claim"],
            fact=DominationFact.from_json(data["fact"]) if "fact" in data else None,
        )


@dataclass(frozen=True)
class Goal:
    """
    Attributes:
        theorem (str): "proposition", "upper_bound" or "family".
        statement (str): The statement being certified.
        parameters (dict[str, Any]): Inputs the certificate is re-derived from.
    """
    theorem: str
    statement: str
    parameters: dict[str, Any] = field(hash=False)

    def to_json(self) -> dict[str, Any]:
        return {"theorem": self.theorem, "statement": self.statement, "parameters": self.parameters}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Goal":
        return cls(theorem=data["theorem"], statement=data["statement"], parameters=dict(data["parameters"]))


@dataclass(frozen=True)
class Certificate:
    """
    An append-only derivation: goal, ordered steps, reported outputs and verdict.
    Family certificates carry their member certificates in `members`.
    """
    goal: Goal
    steps: tuple[Step, ...]
    verdict: str
    outputs: dict[str, Any] = field(default_factory=dict, hash=False)
    members: tuple["Certificate", ...] = ()

    def axiom_steps(self) -> list[Step]:
        return [s for s in self.steps if s.kind == StepKind.AXIOM]

    def all_hypotheses_hold(self) -> bool:
        return all(h.holds for s in self.steps for h in s.hypotheses) and all(m.all_hypotheses_hold() for m in self.members)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "goal": self.goal.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "outputs": self.outputs,
            "verdict": self.verdict,
        }
        if self.members:
            out["members"] = [m.to_json() for m in self.members]
        return out

    def dumps(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_json(), indent=indent)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Certificate":
        return cls(
            goal=Goal.from_json(data["goal"]),
            steps=tuple(Step.from_json(s) for s in data["steps"]),
            verdict=data["verdict"],
            outputs=dict(data.get("outputs", {})),
            members=tuple(cls.from_json(m) for m in data.get("members", [])),
        )


class CertificateLog:
    """Append-only step collector used while a certificate is being built."""
    _steps: list[Step]

    def __init__(self) -> None:
        self._steps = []

    def append(self, step: Step) -> Step:
        self._steps.append(step)
        return step

    def extend(self, steps: list[Step]) -> None:
        for step in steps:
            self.append(step)

    def steps(self) -> tuple[Step, ...]:
        return tuple(self._steps)


def require_holds(steps: Iterable[Step]) -> None:
    """
    Raises:
        HypothesisException: For the first recorded hypothesis that does not hold.
    """
    for step in steps:
        for hypothesis in step.hypotheses:
            if not hypothesis.holds:
                raise HypothesisException("{} in step {}".format(hypothesis.check, step.lemma), json.dumps(hypothesis.args))
