from math import gcd
from typing import Optional

from ..exceptions import KnotExpressionException
from ..floer.semigroup import TorusKnot
from ..upsilon.knot_sum import TorusKnotSum

# GRAMMAR
#
# expr := ["-"] term (("+" | "-") term)*  |  "0"
# term := [uint "*"] "T(" uint "," uint ")"
#
# Whitespace is ignored between tokens.

class KnotExpr:
    """
    A parsed knot expression.

    Attributes:
        source (str): The source text.
        knot_sum (Optional[TorusKnotSum]): The parsed sum, None on error.
        _error (Optional[str]): Error message if parsing failed.
        _position (Optional[int]): 0-based offset of the error.
    """
    source: str
    knot_sum: Optional[TorusKnotSum]
    _error: Optional[str]
    _position: Optional[int]

    def __init__(self, source: str):
        self.source = source
        self.knot_sum = None
        self._error = None
        self._position = None

    def has_error(self) -> bool:
        """Check if there was an error during parsing."""
        return self._error is not None

    def error_msg(self) -> Optional[str]:
        """Get the error message if there was an error."""
        return self._error

    def error_position(self) -> Optional[int]:
        """Get the character offset of the error."""
        return self._position

    def get_knot_sum(self) -> Optional[TorusKnotSum]:
        if self.has_error():
            return None
        return self.knot_sum


class _Parser:
    text: str
    pos: int

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = "end of input" if self.peek() is None else repr(self.peek())
            raise KnotExpressionException("Expected {!r}, found {}".format(ch, found), self.pos)
        self.pos += 1

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise KnotExpressionException("Expected an unsigned integer", start)
        return int(self.text[start:self.pos])

    def term(self, sign: int) -> tuple[TorusKnot, int]:
        coefficient = 1
        if self.peek() is not None and self.peek().isdigit():
            coefficient = self.uint()
            self.expect("*")
        start = self.pos
        self.expect("T")
        self.expect("(")
        p = self.uint()
        self.expect(",")
        q = self.uint()
        self.expect(")")
        if p == 0 or q == 0:
            raise KnotExpressionException("Torus knot parameters must be positive", start)
        if gcd(p, q) != 1:
            raise KnotExpressionException("gcd({},{}) = {} != 1".format(p, q, gcd(p, q)), start)
        if p > q:
            raise KnotExpressionException("T({},{}) has p > q; write T({},{})".format(p, q, q, p), start)
        return TorusKnot.normalized(p, q), sign * coefficient

    def expr(self) -> TorusKnotSum:
        self.skip_ws()
        if self.text[self.pos:].strip() == "0":
            return TorusKnotSum()
        terms: list[tuple[TorusKnot, int]] = []
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        terms.append(self.term(sign))
        while self.peek() is not None:
            op = self.peek()
            if op not in "+-":
                raise KnotExpressionException("Expected '+' or '-', found {!r}".format(op), self.pos)
            self.pos += 1
            terms.append(self.term(1 if op == "+" else -1))
        return TorusKnotSum(terms)


def parse_knot_expression(text: str) -> KnotExpr:
    """
    Parse a knot expression such as "T(9,13) - T(4,9) - T(9,10)" without raising.
    Coefficients of repeated knots are merged and zero terms dropped.

    Args:
        text (str): The source text.

    Returns:
        KnotExpr: With knot_sum set, or with an error message and position.
    """
    expr = KnotExpr(text)
    try:
        expr.knot_sum = _Parser(text).expr()
    except KnotExpressionException as e:
        expr._error = str(e)
        expr._position = e.position
    return expr


def parse(text: str) -> TorusKnotSum:
    """
    Raises:
        KnotExpressionException: On a syntax error, a non-coprime pair or p > q.
    """
    return _Parser(text).expr()
