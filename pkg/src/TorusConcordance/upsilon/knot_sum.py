from math import gcd
from typing import Iterable, Iterator, Optional

from ..floer.semigroup import TorusKnot
from ..exceptions import InvalidKnotException
from .pl_function import PLFunction
from .envelope import upsilon_torus

class TorusKnotSum:
    """
    A formal integer combination sum c_i T(p_i, q_i), an element of the
    concordance group. Negative coefficients are mirrored summands. Zero
    coefficients are never stored; term order is first appearance, which only
    affects printing.
    """
    _terms: dict[TorusKnot, int]

    def __init__(self, terms: Optional[Iterable[tuple[TorusKnot, int]]] = None):
        self._terms = {}
        if terms is not None:
            for knot, coefficient in terms:
                self._terms[knot] = self._terms.get(knot, 0) + coefficient
        self._terms = {knot: c for knot, c in self._terms.items() if c != 0}

    @classmethod
    def of(cls, knot: TorusKnot, coefficient: int = 1) -> "TorusKnotSum":
        return cls([(knot, coefficient)])

    def items(self) -> list[tuple[TorusKnot, int]]:
        return list(self._terms.items())

    def coefficient(self, knot: TorusKnot) -> int:
        return self._terms.get(knot, 0)

    def is_empty(self) -> bool:
        return len(self._terms) == 0

    def __iter__(self) -> Iterator[TorusKnot]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusKnotSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "TorusKnotSum") -> "TorusKnotSum":
        return TorusKnotSum(self.items() + other.items())

    def __neg__(self) -> "TorusKnotSum":
        return TorusKnotSum((knot, -c) for knot, c in self.items())

    def __sub__(self, other: "TorusKnotSum") -> "TorusKnotSum":
        return self + (-other)

    def __rmul__(self, n: int) -> "TorusKnotSum":
        return TorusKnotSum((knot, n * c) for knot, c in self.items())

    def __str__(self) -> str:
        """Canonical surface syntax, e.g. "T(9,13) - T(4,9) - 2*T(9,10)". The empty sum is "0"."""
        if self.is_empty():
            return "0"
        out = ""
        for idx, (knot, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            body = str(knot) if abs(c) == 1 else "{}*{}".format(abs(c), knot)
            if idx == 0:
                out = body if sign == "+" else "-" + body
            else:
                out += " {} {}".format(sign, body)
        return out

    def __repr__(self) -> str:
        return "TorusKnotSum({!r})".format(str(self))

    def to_json(self) -> list[list[int]]:
        """[[coefficient, p, q], ...]"""
        return [[c, knot.p, knot.q] for knot, c in self.items()]

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "TorusKnotSum":
        return cls((TorusKnot(p, q), c) for c, p, q in data)


def vanishing_combination(p: int, q: int, k: int) -> TorusKnotSum:
    """T(q, kq+p) - T(p,q) - k T(q,q+1), which has vanishing Upsilon."""
    return (TorusKnotSum.of(TorusKnot.normalized(q, k * q + p))
            - TorusKnotSum.of(TorusKnot.normalized(p, q))
            - TorusKnotSum.of(TorusKnot.normalized(q, q + 1), k))


def upsilon_of_sum(s: TorusKnotSum) -> PLFunction:
    total = PLFunction.zero()
    for knot, c in s.items():
        total = total + c * upsilon_torus(knot)
    return total


def check_recursion(q: int, p: int, k: int) -> bool:
    """
    Check Upsilon(T(q, kq+p)) = Upsilon(T(p,q)) + k Upsilon(T(q,q+1)) as an exact
    equality of PL functions. A False return means the envelope is wrong.

    Raises:
        InvalidKnotException: If p, q are not positive and coprime, or k < 0.
    """
    if p < 1 or q < 1 or k < 0:
        raise InvalidKnotException("Recursion needs p, q positive and k >= 0, got q={}, p={}, k={}.".format(q, p, k))
    if gcd(p, q) != 1:
        raise InvalidKnotException("Recursion needs gcd(p,q) = 1, got gcd({},{}) = {}.".format(p, q, gcd(p, q)))
    lhs = upsilon_torus(TorusKnot.normalized(q, k * q + p))
    rhs = upsilon_torus(TorusKnot.normalized(p, q)) + k * upsilon_torus(TorusKnot.normalized(q, q + 1))
    return lhs == rhs
