from .expr_parse import KnotExpr, parse, parse_knot_expression
from .app import CommandApp, app, main, EXIT_OK, EXIT_INVARIANT_FAILED, EXIT_BAD_INPUT, EXIT_VERIFY_FAILED
