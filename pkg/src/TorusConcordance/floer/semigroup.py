from dataclasses import dataclass, field
from math import gcd

from ..exceptions import InvalidKnotException

@dataclass(frozen=True, order=True)
class TorusKnot:
    """
    The positive torus knot T(p, q).

    Attributes:
        p (int): The smaller parameter, p >= 1. p == 1 encodes the unknot.
        q (int): The larger parameter, q > p, coprime to p.
    """
    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)) or isinstance(self.p, bool) or isinstance(self.q, bool):
            raise InvalidKnotException("Torus knot parameters must be integers, got ({!r}, {!r}).".format(self.p, self.q))
        if self.p < 1:
            raise InvalidKnotException("Torus knot parameter p must be positive, got {}.".format(self.p))
        if self.p >= self.q:
            raise InvalidKnotException("Torus knot T({},{}) must satisfy p < q.".format(self.p, self.q))
        if gcd(self.p, self.q) != 1:
            raise InvalidKnotException("Torus knot T({},{}) needs gcd(p,q) = 1, got {}.".format(self.p, self.q, gcd(self.p, self.q)))

    @classmethod
    def normalized(cls, a: int, b: int) -> "TorusKnot":
        """
        Build T(a, b) with the parameters in either order. T(a,b) and T(b,a)
        are the same knot. T(1,1) is the unknot and maps to T(1,2).
        """
        if a <= 0 or b <= 0:
            raise InvalidKnotException("Torus knot parameters must be positive, got ({}, {}).".format(a, b))
        if a == b == 1:
            return cls(1, 2)
        return cls(min(a, b), max(a, b))

    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2

    def __str__(self) -> str:
        return "T({},{})".format(self.p, self.q)


@dataclass(frozen=True)
class SemigroupView:
    """
    The numerical semigroup <p,q> = {px + qy | x, y >= 0} of a torus knot.

    Attributes:
        p (int): First generator.
        q (int): Second generator.
        conductor (int): (p-1)(q-1); every n >= conductor is a member.
        genus (int): Number of gaps, (p-1)(q-1)/2.
    """
    p: int
    q: int
    conductor: int = field(init=False)
    genus: int = field(init=False)
    _q_inverse: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        TorusKnot(self.p, self.q) # validates the generators
        object.__setattr__(self, "conductor", (self.p - 1) * (self.q - 1))
        object.__setattr__(self, "genus", (self.p - 1) * (self.q - 1) // 2)
        object.__setattr__(self, "_q_inverse", pow(self.q, -1, self.p) if self.p > 1 else 0)

    @classmethod
    def of(cls, knot: TorusKnot) -> "SemigroupView":
        return cls(knot.p, knot.q)

    @property
    def knot(self) -> TorusKnot:
        return TorusKnot(self.p, self.q)


def contains(S: SemigroupView, n: int) -> bool:
    """
    Membership test in O(1). Every member has a unique representation px + qy
    with 0 <= y < p, and y is fixed by the residue of n mod p, so n is a member
    iff n >= q*y for that y.
    """
    if n < 0:
        return False
    if S.p == 1:
        return True
    y = (n * S._q_inverse) % S.p
    return n >= S.q * y


def brute_force_contains(p: int, q: int, n: int) -> bool:
    """Double-loop membership test, kept as an oracle for contains."""
    if n < 0:
        return False
    for x in range(n // p + 1):
        for y in range((n - p * x) // q + 1):
            if p * x + q * y == n:
                return True
    return False


def gaps(S: SemigroupView) -> list[int]:
    """All non-negative integers outside the semigroup, ascending. Empty for the unknot."""
    if S.p == 1:
        return []
    return [n for n in range(S.conductor) if not contains(S, n)]


def counting(S: SemigroupView, m: int) -> int:
    """
    I(m): the number of semigroup elements in [0, m).

    Args:
        S (SemigroupView): The semigroup.
        m (int): Upper bound (exclusive), m >= 0.

    Returns:
        int: #(S intersected with [0, m)).
    """
    if m < 0:
        raise ValueError("counting needs m >= 0, got {}.".format(m))
    if m >= S.conductor:
        return m - S.genus
    total = 0
    # members below m are px + qy with 0 <= y < p, qy < m
    for y in range(min(S.p - 1, (m - 1) // S.q) + 1):
        total += (m - S.q * y - 1) // S.p + 1
    return total


def frobenius_number(S: SemigroupView) -> int:
    """Largest gap, pq - p - q. -1 for the unknot (no gaps)."""
    return S.conductor - 1


def apery_set(S: SemigroupView) -> list[int]:
    """Smallest member in each residue class mod p: 0, q, 2q, ..., (p-1)q."""
    return [S.q * y for y in range(S.p)]
