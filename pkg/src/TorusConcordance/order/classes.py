from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from ..exceptions import HypothesisException, InvalidStaircaseException
from ..floer.staircase import Staircase
from .a_tuple import ATuple

@dataclass(frozen=True, order=True)
class Bracket:
    """
    The epsilon-equivalence class [b_1, ..., b_2m] of St(b_1, ..., b_2m).
    """
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) == 0:
            raise InvalidStaircaseException("A bracket class needs a nontrivial staircase.")
        Staircase(self.entries) # palindromic, positive, even length

    @classmethod
    def block(cls, n: int) -> "Bracket":
        """[1, n, n, 1]"""
        return cls((1, n, n, 1))

    def a_tuple(self) -> ATuple:
        return ATuple(self.entries)

    def __str__(self) -> str:
        return "[{}]".format(",".join(str(b) for b in self.entries))


@dataclass(frozen=True, order=True)
class Remainder:
    """A class known only through facts about it, e.g. the O in k[1,p-1,p-1,1] + O."""
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Bracket, Remainder]

class ClassExpr:
    """
    Formal integer combination of bracket classes and named remainders in the
    ordered group of epsilon-classes. Zero coefficients are dropped.
    """
    _terms: dict[Term, int]

    def __init__(self, terms: Optional[Iterable[tuple[Term, int]]] = None):
        collected: dict[Term, int] = {}
        for term, c in (terms or []):
            collected[term] = collected.get(term, 0) + c
        self._terms = {term: c for term, c in collected.items() if c != 0}

    @classmethod
    def of(cls, term: Term, coefficient: int = 1) -> "ClassExpr":
        return cls([(term, coefficient)])

    def items(self) -> list[tuple[Term, int]]:
        return list(self._terms.items())

    def coefficient(self, term: Term) -> int:
        return self._terms.get(term, 0)

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ClassExpr") -> "ClassExpr":
        return ClassExpr(self.items() + other.items())

    def __neg__(self) -> "ClassExpr":
        return ClassExpr((term, -c) for term, c in self.items())

    def __sub__(self, other: "ClassExpr") -> "ClassExpr":
        return self + (-other)

    def __rmul__(self, n: int) -> "ClassExpr":
        return ClassExpr((term, n * c) for term, c in self.items())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = ""
        for idx, (term, c) in enumerate(self.items()):
            body = str(term) if abs(c) == 1 else "{}{}".format(abs(c), term)
            if idx == 0:
                out = body if c > 0 else "-" + body
            else:
                out += " {} {}".format("-" if c < 0 else "+", body)
        return out

    def __repr__(self) -> str:
        return "ClassExpr({!r})".format(str(self))


@dataclass(frozen=True)
class PeelResult:
    """
    [(1,n)^k, middle, (n,1)^k] = k[1,n,n,1] + [middle]

    Attributes:
        n (int): Block parameter.
        k (int): Number of (1,n) blocks removed from each end.
        remainder (Staircase): The middle palindrome.
    """
    n: int
    k: int
    remainder: Staircase

    def expression(self, remainder_name: Optional[str] = None) -> ClassExpr:
        """k[1,n,n,1] + [remainder], the remainder optionally named."""
        expr = ClassExpr.of(Bracket.block(self.n), self.k)
        if remainder_name is not None:
            return expr + ClassExpr.of(Remainder(remainder_name))
        if not self.remainder.is_trivial():
            return expr + ClassExpr.of(Bracket(self.remainder.b))
        return expr


def peel(s: Union[Staircase, Sequence[int]], n: int) -> PeelResult:
    """
    Split off as many [1,n,n,1] blocks as the staircase allows.

    k is maximal with the staircase starting with (1,n)^k (and, by palindromicity,
    ending with (n,1)^k) around a middle part. The split requires every entry of
    the middle to be at most n.

    Raises:
        HypothesisException: If n < 1, or a middle entry exceeds n.
    """
    if not isinstance(s, Staircase):
        s = Staircase(tuple(s))
    if n < 1:
        raise HypothesisException("n >= 1", "got n = {}".format(n))
    b = s.b
    k = 0
    while 4 * (k + 1) <= len(b) and b[2 * k] == 1 and b[2 * k + 1] == n:
        k += 1
    middle = b[2 * k:len(b) - 2 * k]
    for offset, entry in enumerate(middle):
        if entry > n:
            raise HypothesisException("b_j <= n for every middle entry",
                                      "b_{} = {} exceeds n = {}".format(2 * k + offset + 1, entry, n))
    return PeelResult(n=n, k=k, remainder=Staircase(middle))


def join(k: int, n: int, remainder: Union[Staircase, Sequence[int]]) -> Staircase:
    """Inverse of peel: (1,n)^k, remainder, (n,1)^k."""
    middle = remainder.b if isinstance(remainder, Staircase) else tuple(remainder)
    return Staircase((1, n) * k + tuple(middle) + (n, 1) * k)


def split(outer: Sequence[int], inner: Sequence[int]) -> ClassExpr:
    """
    Check the split rule for half-sequences a_1..a_k and b_1..b_m and return the
    combined class [a, b, b-reversed, a-reversed] as the sum of its two parts.

    The rule needs k even and max{a_i, i odd} <= b_j <= min{a_i, i even} for
    every j (1-based positions).

    Raises:
        HypothesisException: If a hypothesis fails.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    if len(outer) == 0 or len(outer) % 2 != 0:
        raise HypothesisException("outer half has even positive length", "got length {}".format(len(outer)))
    if len(inner) == 0:
        raise HypothesisException("inner half is nonempty")
    odd_max = max(outer[0::2])
    even_min = min(outer[1::2])
    for j, entry in enumerate(inner):
        if not odd_max <= entry <= even_min:
            raise HypothesisException("max odd a_i <= b_j <= min even a_i",
                                      "b_{} = {} outside [{}, {}]".format(j + 1, entry, odd_max, even_min))
    return (ClassExpr.of(Bracket(outer + outer[::-1]))
            + ClassExpr.of(Bracket(inner + inner[::-1])))
