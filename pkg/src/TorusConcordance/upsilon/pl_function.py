from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from ..exceptions import DomainException

Rational = Union[int, Fraction]

DOMAIN_START = Fraction(0)
DOMAIN_END = Fraction(2)

@dataclass(frozen=True)
class PLFunction:
    """
    Exact continuous piecewise-linear function on [0, 2].

    Always held in canonical form: breakpoints strictly increasing from 0 to 2,
    and no interior breakpoint where the left and right slopes agree. Two
    PLFunctions are equal iff they are equal as functions.

    Attributes:
        breakpoints (tuple[Fraction, ...]): Abscissae t_0 = 0 < ... < t_l = 2.
        values (tuple[Fraction, ...]): Ordinates at each breakpoint.
    """
    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        ts = tuple(Fraction(t) for t in self.breakpoints)
        vs = tuple(Fraction(v) for v in self.values)
        if len(ts) != len(vs) or len(ts) < 2:
            raise ValueError("A PL function needs matching breakpoints and values, at least two of each.")
        if ts[0] != DOMAIN_START or ts[-1] != DOMAIN_END:
            raise ValueError("Breakpoints must start at 0 and end at 2, got {} .. {}.".format(ts[0], ts[-1]))
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise ValueError("Breakpoints must be strictly increasing.")
        ts, vs = _canonicalize(ts, vs)
        object.__setattr__(self, "breakpoints", ts)
        object.__setattr__(self, "values", vs)

    @classmethod
    def from_points(cls, points: Iterable[tuple[Rational, Rational]]) -> "PLFunction":
        points = list(points)
        return cls(tuple(t for t, _ in points), tuple(v for _, v in points))

    @classmethod
    def zero(cls) -> "PLFunction":
        return cls((DOMAIN_START, DOMAIN_END), (Fraction(0), Fraction(0)))

    def points(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.breakpoints, self.values))

    def slopes(self) -> list[Fraction]:
        """Slope of each linear piece, left to right."""
        return [(v1 - v0) / (t1 - t0) for (t0, v0), (t1, v1) in zip(self.points(), self.points()[1:])]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def is_convex(self) -> bool:
        s = self.slopes()
        return all(a <= b for a, b in zip(s, s[1:]))

    def reflect(self) -> "PLFunction":
        """The function t -> f(2 - t)."""
        return PLFunction(tuple(DOMAIN_END - t for t in reversed(self.breakpoints)), tuple(reversed(self.values)))

    def is_symmetric(self) -> bool:
        return self.reflect() == self

    def __call__(self, t: Rational) -> Fraction:
        return eval_at(self, t)

    def __add__(self, other: "PLFunction") -> "PLFunction":
        return add(self, other)

    def __neg__(self) -> "PLFunction":
        return negate(self)

    def __sub__(self, other: "PLFunction") -> "PLFunction":
        return add(self, negate(other))

    def __rmul__(self, c: int) -> "PLFunction":
        return scale(c, self)


def _canonicalize(ts: tuple[Fraction, ...], vs: tuple[Fraction, ...]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Drop interior breakpoints where the function is locally linear."""
    out_t = [ts[0]]
    out_v = [vs[0]]
    for idx in range(1, len(ts) - 1):
        left = (vs[idx] - out_v[-1]) / (ts[idx] - out_t[-1])
        right = (vs[idx + 1] - vs[idx]) / (ts[idx + 1] - ts[idx])
        if left != right:
            out_t.append(ts[idx])
            out_v.append(vs[idx])
    out_t.append(ts[-1])
    out_v.append(vs[-1])
    return tuple(out_t), tuple(out_v)


def eval_at(f: PLFunction, t: Rational) -> Fraction:
    """
    Evaluate f at t by linear interpolation.

    Raises:
        DomainException: If t is outside [0, 2].
    """
    t = Fraction(t)
    if t < DOMAIN_START or t > DOMAIN_END:
        raise DomainException("t = {} is outside [0, 2].".format(t))
    idx = bisect_left(f.breakpoints, t)
    if f.breakpoints[idx] == t:
        return f.values[idx]
    t0, t1 = f.breakpoints[idx - 1], f.breakpoints[idx]
    v0, v1 = f.values[idx - 1], f.values[idx]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def add(f: PLFunction, g: PLFunction) -> PLFunction:
    ts = sorted(set(f.breakpoints) | set(g.breakpoints))
    return PLFunction(tuple(ts), tuple(eval_at(f, t) + eval_at(g, t) for t in ts))


def scale(c: int, f: PLFunction) -> PLFunction:
    if c == 0:
        return PLFunction.zero()
    return PLFunction(f.breakpoints, tuple(c * v for v in f.values))


def negate(f: PLFunction) -> PLFunction:
    return scale(-1, f)
