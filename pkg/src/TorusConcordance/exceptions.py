from typing import Optional


class InvalidKnotException(ValueError):
    """Raised for torus knot parameters that are not a coprime pair 1 <= p < q."""
    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)


class InvalidStaircaseException(ValueError):
    """Raised for b-vectors that are not palindromic, positive and of even length."""
    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)


class MalformedTupleException(ValueError):
    """Raised when an a-tuple satisfies none of the three admissible shapes."""
    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)


class DomainException(ValueError):
    """Raised when a PL function is evaluated outside [0, 2]."""
    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)


class HypothesisException(ValueError):
    """
    Raised when a precondition of a decomposition or certificate fails.

    Attributes:
        precondition (str): The failed precondition, e.g. "p >= 4".
    """
    precondition: str

    def __init__(self, precondition: str, detail: Optional[str] = None) -> None:
        self.precondition = precondition
        message = "Precondition failed: {}".format(precondition)
        if detail is not None:
            message += " ({})".format(detail)
        super().__init__(message)


class FamilyRuleException(HypothesisException):
    """
    Raised when a family rule emits a member violating the family constraints.

    Attributes:
        index (int): 1-based index of the offending member.
    """
    index: int

    def __init__(self, index: int, precondition: str, detail: Optional[str] = None) -> None:
        self.index = index
        super().__init__(precondition, "member {}{}".format(index, "" if detail is None else ", " + detail))


class KnotExpressionException(ValueError):
    """
    Raised for knot expressions that cannot be parsed.

    Attributes:
        position (int): 0-based character offset of the error in the source text.
    """
    position: int

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__("{} at position {}".format(message, position))
