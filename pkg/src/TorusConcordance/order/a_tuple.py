import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..exceptions import MalformedTupleException

class Condition(enum.IntEnum):
    """The three admissible shapes of an a-tuple."""
    ALL_POSITIVE = 1 # a_1, ..., a_n > 0
    LAST_BELOW_MINUS_ONE = 2 # a_1, ..., a_{n-1} > 0, n > 1, a_n < -1
    MINUS_ONE_THEN_NEGATIVE = 3 # a_1, ..., a_{n-2} > 0, n > 2, a_{n-1} = -1, a_n < 0


class Comparison(str, enum.Enum):
    MUCH_LESS = "<<"
    MUCH_GREATER = ">>"
    UNKNOWN = "?"

    def swapped(self) -> "Comparison":
        if self is Comparison.MUCH_LESS:
            return Comparison.MUCH_GREATER
        if self is Comparison.MUCH_GREATER:
            return Comparison.MUCH_LESS
        return self


class EpsilonSign(enum.IntEnum):
    """Value of the epsilon invariant."""
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def negate(self) -> "EpsilonSign":
        """epsilon(-K) = -epsilon(K)."""
        return EpsilonSign(-int(self))

    def combine(self, other: "EpsilonSign") -> Optional["EpsilonSign"]:
        """
        Sign of a sum from the signs of its summands. Equal signs persist and a zero
        summand is neutral; opposite signs leave the sum undetermined (None).
        """
        if self == other:
            return self
        if self == EpsilonSign.ZERO:
            return other
        if other == EpsilonSign.ZERO:
            return self
        return None


def satisfies(entries: Sequence[int], condition: Condition) -> bool:
    n = len(entries)
    if condition == Condition.ALL_POSITIVE:
        return n >= 1 and all(a > 0 for a in entries)
    if condition == Condition.LAST_BELOW_MINUS_ONE:
        return n > 1 and all(a > 0 for a in entries[:-1]) and entries[-1] < -1
    return n > 2 and all(a > 0 for a in entries[:-2]) and entries[-2] == -1 and entries[-1] < 0


def classify(a: Union["ATuple", Sequence[int]]) -> Condition:
    """
    The unique shape condition an a-tuple satisfies.

    Raises:
        MalformedTupleException: For empty tuples, zero entries, or negative entries
                                 in a slot no condition allows.
    """
    entries = tuple(a.entries) if isinstance(a, ATuple) else tuple(a)
    if len(entries) == 0:
        raise MalformedTupleException("An a-tuple must be nonempty.")
    for idx, entry in enumerate(entries):
        if entry == 0:
            raise MalformedTupleException("a-tuple entry a_{} is zero.".format(idx + 1))
    matches = [c for c in Condition if satisfies(entries, c)]
    if len(matches) != 1:
        first_bad = next(idx for idx, entry in enumerate(entries) if entry < 0)
        raise MalformedTupleException("a-tuple {} has a forbidden negative entry a_{} = {}.".format(
            list(entries), first_bad + 1, entries[first_bad]))
    return matches[0]


@dataclass(frozen=True)
class ATuple:
    """
    The tuple a(C) = (a_1, ..., a_n), defined when epsilon(C) = 1.

    Attributes:
        entries (tuple[int, ...]): Nonzero integers in one of the three admissible shapes.
    """
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        classify(self.entries)

    @property
    def condition(self) -> Condition:
        return classify(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __str__(self) -> str:
        return "({})".format(",".join(str(a) for a in self.entries))


def compare(a: ATuple, b: ATuple) -> Comparison:
    """
    Order of the classes of two complexes from their a-tuples, using only the two
    comparison rules, each read in both directions:

    * a_1 differ and both positive: the larger a_1 is the much smaller class.
    * a_1 equal and positive, a_2 differ and both positive: the larger a_2 is the
      much larger class.

    Anything else is UNKNOWN. Both tuples must be all-positive to be decided.
    """
    if a.condition != Condition.ALL_POSITIVE or b.condition != Condition.ALL_POSITIVE:
        return Comparison.UNKNOWN
    if a[0] > b[0]:
        return Comparison.MUCH_LESS
    if b[0] > a[0]:
        return Comparison.MUCH_GREATER
    if len(a) < 2 or len(b) < 2:
        return Comparison.UNKNOWN
    if a[1] > b[1]:
        return Comparison.MUCH_GREATER
    if b[1] > a[1]:
        return Comparison.MUCH_LESS
    return Comparison.UNKNOWN
