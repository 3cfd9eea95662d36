"""
Named, re-evaluable hypothesis checks.

A certificate never stores the bare claim that a hypothesis holds: it stores
the check name, the JSON arguments and the observed outcome, and the verifier
re-runs the check from that record.
"""
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable

from ..floer.semigroup import TorusKnot
from ..floer.staircase import Staircase, from_torus_knot, has_prefix, max_entry_bound
from ..upsilon.knot_sum import TorusKnotSum, upsilon_of_sum
from .a_tuple import ATuple, Comparison, Condition, compare
from .classes import peel

class CheckRegistry:
    """Maps check names to predicates over JSON-serializable keyword arguments."""
    checks: dict[str, Callable[..., bool]]

    def __init__(self) -> None:
        self.checks = {}

    def register(self, name: str):
        """
        Decorator to register a predicate under a name. Names are unique and
        are part of the certificate format.

        :param name: The check name stored in certificates.
        """
        if name in self.checks:
            raise ValueError("Check {} already registered.".format(name))
        def decorator(func):
            self.checks[name] = func
            return func
        return decorator

    def has_check(self, name: str) -> bool:
        return name in self.checks

    def evaluate(self, name: str, args: dict[str, Any]) -> bool:
        """
        Run a registered check.

        Raises:
            KeyError: If the check is unknown.
            TypeError, ValueError: If the arguments do not fit the check.
        """
        return bool(self.checks[name](**args))


REGISTRY = CheckRegistry()

@dataclass(frozen=True)
class Hypothesis:
    """
    One evaluated hypothesis.

    Attributes:
        check (str): Registered check name.
        args (dict[str, Any]): Keyword arguments, JSON-serializable.
        holds (bool): Outcome observed when the certificate was built.
    """
    check: str
    args: dict[str, Any] = field(hash=False)
    holds: bool

    @classmethod
    def evaluate(cls, check: str, registry: CheckRegistry = REGISTRY, **args: Any) -> "Hypothesis":
        return cls(check=check, args=args, holds=registry.evaluate(check, args))

    def recheck(self, registry: CheckRegistry = REGISTRY) -> bool:
        """Whether re-evaluation reproduces the stored outcome."""
        return registry.evaluate(self.check, self.args) == self.holds

    def to_json(self) -> dict[str, Any]:
        return {"check": self.check, "args": self.args, "holds": self.holds}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Hypothesis":
        return cls(check=data["check"], args=dict(data["args"]), holds=data["holds"])


@REGISTRY.register("coprime")
def _coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1

@REGISTRY.register("at_least")
def _at_least(value: int, bound: int) -> bool:
    return value >= bound

@REGISTRY.register("less_than")
def _less_than(lhs: int, rhs: int) -> bool:
    return lhs < rhs

@REGISTRY.register("at_most")
def _at_most(lhs: int, rhs: int) -> bool:
    return lhs <= rhs

@REGISTRY.register("less_than_half")
def _less_than_half(lhs: int, rhs: int) -> bool:
    # lhs < rhs / 2
    return 2 * lhs < rhs

@REGISTRY.register("division")
def _division(dividend: int, divisor: int, quotient: int, remainder: int) -> bool:
    return divmod(dividend, divisor) == (quotient, remainder)

@REGISTRY.register("staircase_prefix")
def _staircase_prefix(p: int, q: int, prefix: list[int]) -> bool:
    return has_prefix(from_torus_knot(TorusKnot(p, q)), prefix)

@REGISTRY.register("max_entry_bound")
def _max_entry_bound(p: int, q: int) -> bool:
    return max_entry_bound(TorusKnot(p, q))

@REGISTRY.register("peel")
def _peel(p: int, q: int, n: int, k: int, remainder_prefix: list[int]) -> bool:
    result = peel(from_torus_knot(TorusKnot(p, q)), n)
    return result.k == k and has_prefix(result.remainder, remainder_prefix) and not result.remainder.is_trivial()

@REGISTRY.register("compare")
def _compare(lhs: list[int], rhs: list[int], relation: str) -> bool:
    return compare(ATuple(tuple(lhs)), ATuple(tuple(rhs))) == Comparison(relation)

@REGISTRY.register("equal")
def _equal(lhs: Any, rhs: Any) -> bool:
    return lhs == rhs

@REGISTRY.register("upsilon_vanishes")
def _upsilon_vanishes(terms: list[list[int]]) -> bool:
    return upsilon_of_sum(TorusKnotSum.from_json(terms)).is_zero()

@REGISTRY.register("positive_class")
def _positive_class(entries: list[int]) -> bool:
    # a nontrivial staircase has epsilon = 1
    return not Staircase(tuple(entries)).is_trivial() and ATuple(tuple(entries)).condition == Condition.ALL_POSITIVE
