"""
Upsilon of L-space torus knots as a lower envelope of affine functions.

With g the genus and I(m) = #(S cap [0, m)) the semigroup counting function,

    Upsilon(t) = -2 * min_{0 <= m <= 2g} ( I(m) + (t/2)(g - m) ).

In the variable s = t/2 in [0, 1] the candidates are integer lines
I(m) + (g - m) s with strictly decreasing slopes, so the envelope is built
with a monotone hull over integers and only the surviving breakpoints are
turned into fractions.
"""
from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache

from ..floer.semigroup import TorusKnot, SemigroupView, contains
from .pl_function import PLFunction, Rational, DOMAIN_START, DOMAIN_END
from ..exceptions import DomainException

UPSILON_CACHE_SIZE = 1024

Line = tuple[int, int] # (intercept, slope)

def envelope_lines(S: SemigroupView) -> list[Line]:
    """The 2g + 1 lines (I(m), g - m), ordered by decreasing slope."""
    lines: list[Line] = []
    count = 0
    for m in range(2 * S.genus + 1):
        lines.append((count, S.genus - m))
        if contains(S, m):
            count += 1
    return lines


def _redundant(l1: Line, l2: Line, l3: Line) -> bool:
    """With slopes b1 > b2 > b3, l2 never attains the minimum strictly."""
    (a1, b1), (a2, b2), (a3, b3) = l1, l2, l3
    return (a3 - a1) * (b1 - b2) <= (a2 - a1) * (b1 - b3)


def lower_envelope(lines: list[Line]) -> list[tuple[Fraction, Fraction]]:
    """
    Minimum of the given lines on s in [0, 1], as breakpoint/value pairs.

    Args:
        lines (list[Line]): (intercept, slope) pairs, slopes strictly decreasing.

    Returns:
        list[tuple[Fraction, Fraction]]: Points (s, min value) from s = 0 to s = 1.
    """
    hull: list[Line] = []
    for line in lines:
        while len(hull) >= 2 and _redundant(hull[-2], hull[-1], line):
            hull.pop()
        hull.append(line)

    # hull[i] is minimal on [xs[i-1], xs[i]]
    xs = [Fraction(a2 - a1, b1 - b2) for (a1, b1), (a2, b2) in zip(hull, hull[1:])]
    samples = [Fraction(0)] + [x for x in xs if 0 < x < 1] + [Fraction(1)]
    points = []
    for s in samples:
        a, b = hull[bisect_left(xs, s)]
        points.append((s, a + b * s))
    return points


@lru_cache(maxsize=UPSILON_CACHE_SIZE)
def upsilon_torus(k: TorusKnot) -> PLFunction:
    """
    Upsilon of the torus knot T(p,q). The unknot gives the zero function.
    Memoized for the last UPSILON_CACHE_SIZE knots; lru_cache is safe for concurrent readers.
    """
    if k.is_unknot():
        return PLFunction.zero()
    points = lower_envelope(envelope_lines(SemigroupView.of(k)))
    return PLFunction.from_points((2 * s, -2 * value) for s, value in points)


def upsilon_by_minimization(k: TorusKnot, t: Rational) -> Fraction:
    """Direct evaluation of -2 min_m (I(m) + (t/2)(g - m)), the oracle for upsilon_torus."""
    t = Fraction(t)
    if t < DOMAIN_START or t > DOMAIN_END:
        raise DomainException("t = {} is outside [0, 2].".format(t))
    S = SemigroupView.of(k)
    best = None
    count = 0
    for m in range(2 * S.genus + 1):
        value = count + (t / 2) * (S.genus - m)
        if best is None or value < best:
            best = value
        if contains(S, m):
            count += 1
    return -2 * best
