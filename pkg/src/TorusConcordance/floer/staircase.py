from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Sequence, TYPE_CHECKING

import sympy as sp

from ..exceptions import InvalidStaircaseException
from .semigroup import TorusKnot, SemigroupView, contains

if TYPE_CHECKING:
    from ..order.a_tuple import ATuple

_t = sp.Symbol("t")

@dataclass(frozen=True)
class Staircase:
    """
    The staircase complex St(b_1, ..., b_2m), encoded by its step lengths.

    Attributes:
        b (tuple[int, ...]): Palindromic vector of positive integers, even length.
                             The empty vector is the trivial complex of the unknot.
    """
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.b) % 2 != 0:
            raise InvalidStaircaseException("Staircase needs an even number of entries, got {}.".format(len(self.b)))
        for idx, entry in enumerate(self.b):
            if not isinstance(entry, int) or entry < 1:
                raise InvalidStaircaseException("Staircase entry {} at index {} is not a positive integer.".format(entry, idx))
        if self.b != self.b[::-1]:
            raise InvalidStaircaseException("Staircase {} is not palindromic.".format(list(self.b)))

    @property
    def m(self) -> int:
        return len(self.b) // 2

    def is_trivial(self) -> bool:
        return len(self.b) == 0

    def __len__(self) -> int:
        return len(self.b)

    def __iter__(self) -> Iterator[int]:
        return iter(self.b)

    def __getitem__(self, idx):
        return self.b[idx]


@dataclass(frozen=True)
class AlexanderExponents:
    """
    Exponents 0 = alpha_0 < alpha_1 < ... < alpha_2m of the Alexander polynomial
    sum (-1)^i t^alpha_i of an L-space knot.
    """
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if len(self.alpha) % 2 != 1 or self.alpha[0] != 0:
            raise InvalidStaircaseException("Alexander exponents must have odd length and start at 0, got {}.".format(list(self.alpha)))
        if any(a >= b for a, b in zip(self.alpha, self.alpha[1:])):
            raise InvalidStaircaseException("Alexander exponents must be strictly increasing, got {}.".format(list(self.alpha)))


def from_torus_knot(k: TorusKnot) -> Staircase:
    """
    Run-length encode the membership of <p,q> on [0, conductor). Runs alternate
    member / gap starting with the member run at 0, and the last run is the gap
    run ending at the Frobenius number. The unknot gives the empty staircase.
    """
    S = SemigroupView.of(k)
    if k.is_unknot():
        return Staircase(())
    runs: list[int] = []
    current = True
    length = 0
    for n in range(S.conductor):
        if contains(S, n) == current:
            length += 1
        else:
            runs.append(length)
            current = not current
            length = 1
    runs.append(length)
    return Staircase(tuple(runs))


def alexander_exponents(s: Staircase) -> AlexanderExponents:
    """Prefix sums of b with a leading 0."""
    return AlexanderExponents((0,) + tuple(accumulate(s.b)))


def alexander_polynomial(exps: AlexanderExponents) -> sp.Poly:
    """The alternating polynomial sum (-1)^i t^alpha_i."""
    coeffs = [0] * (exps.alpha[-1] + 1)
    for i, alpha in enumerate(exps.alpha):
        coeffs[alpha] = (-1) ** i
    return sp.Poly.from_list(coeffs[::-1], _t, domain=sp.ZZ)


def semigroup_alexander_polynomial(S: SemigroupView) -> sp.Poly:
    """
    (1 - t) * sum_{s in S} t^s, computed as (1 - t) * (members below the conductor)
    + t^conductor, since the tail of the series telescopes.
    """
    head = [1 if contains(S, n) else 0 for n in range(S.conductor)]
    series = sp.Poly.from_list(head[::-1] or [0], _t, domain=sp.ZZ)
    one_minus_t = sp.Poly.from_list([-1, 1], _t, domain=sp.ZZ)
    return one_minus_t * series + sp.Poly(_t ** S.conductor, _t, domain=sp.ZZ)


def a_tuple(s: Staircase) -> "ATuple":
    """
    The a-tuple of a staircase is its b-vector. Only defined when epsilon = 1,
    i.e. for a nontrivial staircase.
    """
    from ..order.a_tuple import ATuple

    if s.is_trivial():
        raise InvalidStaircaseException("The trivial staircase has epsilon = 0; its a-tuple is undefined.")
    return ATuple(s.b)


def max_entry_bound(k: TorusKnot) -> bool:
    """
    Whether every entry of the staircase of T(p,q) is at most p - 1. A longer
    gap run would contain p consecutive non-members.
    """
    return all(entry <= k.p - 1 for entry in from_torus_knot(k).b)


def has_prefix(s: Staircase, pattern: Sequence[int]) -> bool:
    pattern = tuple(pattern)
    return s.b[:len(pattern)] == pattern
