import argparse
import json
import logging
import sys
import traceback
from fractions import Fraction
from typing import Callable, Optional, TextIO

from .. import __version__
from ..floer.semigroup import TorusKnot, SemigroupView, contains, frobenius_number
from ..floer.staircase import (from_torus_knot, alexander_exponents, alexander_polynomial,
                               semigroup_alexander_polynomial, a_tuple)
from ..upsilon.knot_sum import upsilon_of_sum, check_recursion
from ..upsilon.pl_function import eval_at
from ..upsilon.plot_write import SvgWriter, format_rational, write_pl_function
from ..order.family import RULES, DoublingRule, FamilyBuilder
from ..order.proposition import CertificateBuilder
from ..order.verify import CertificateVerifier
from .expr_parse import parse

EXIT_OK = 0
EXIT_INVARIANT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

Handler = Callable[["CommandApp", argparse.Namespace, TextIO], int]

class CommandApp:
    """Dispatches parsed command lines to registered command handlers."""
    commands: dict[str, Handler]
    logger: logging.Logger

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self.commands = {}
        self.logger = logger if logger is not None else logging.getLogger(__name__)

    def command(self, name: str):
        """
        Decorator to register a handler for a subcommand. The handler receives
        the app, the parsed arguments and the output stream, and returns the
        exit code.

        :param name: The subcommand name.
        """
        def decorator(func: Handler) -> Handler:
            self.commands[name] = func
            return func
        return decorator

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="torus-concordance",
            description="Exact concordance invariants of torus knots and epsilon-order certificates.",
        )
        parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
        parser.add_argument("--verify", metavar="FILE", help="re-check a stored certificate")
        parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
        sub = parser.add_subparsers(dest="command")

        p = sub.add_parser("staircase", help="staircase, a-tuple, genus and Alexander exponents of T(p,q)")
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)

        p = sub.add_parser("semigroup", help="membership table of the semigroup <p,q>")
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        p.add_argument("--limit", type=int, default=None, help="rows 0..N-1 (default: up to the conductor)")

        p = sub.add_parser("upsilon", help="Upsilon of a knot expression")
        p.add_argument("expr")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--csv", action="store_true")
        fmt.add_argument("--svg", metavar="PATH")
        p.add_argument("--eval", metavar="T", dest="eval_at", help="print Upsilon at t, after any --json, --csv or --svg output")

        p = sub.add_parser("vanish", help="exit 0 iff Upsilon of the expression vanishes")
        p.add_argument("expr")

        p = sub.add_parser("recursion", help="check Upsilon(T(q,kq+p)) = Upsilon(T(p,q)) + k Upsilon(T(q,q+1))")
        p.add_argument("q", type=int)
        p.add_argument("p", type=int)
        p.add_argument("k", type=int)

        p = sub.add_parser("certify", help="lower and upper bound certificates for T(q,kq+p) - T(p,q) - k T(q,q+1)")
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        p.add_argument("k", type=int)

        p = sub.add_parser("family", help="linearly independent family with vanishing Upsilon")
        p.add_argument("--count", type=int, required=True)
        p.add_argument("--rule", choices=sorted(RULES), default="default")
        p.add_argument("--p1", type=int, default=4, help="first p for the doubling rule")
        p.add_argument("--k", type=int, default=1, help="k for the doubling rule")
        return parser

    def run(self, argv: list[str], out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
        """
        Parse argv and run the selected command.

        Returns:
            int: 0 on success, 1 if an invariant check failed or on an internal
                 error, 2 on bad input, 3 if certificate verification failed.
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_BAD_INPUT
        if args.verbose:
            self.logger.setLevel(logging.DEBUG)

        if args.verify is not None:
            return self._verify(args.verify, out, err)
        if args.command is None:
            parser.print_usage(err)
            return EXIT_BAD_INPUT

        func = self.commands[args.command]
        try:
            return func(self, args, out)
        except ValueError as e:
            # covers every domain exception
            self.logger.debug("\n".join(traceback.format_exception(type(e), e, e.__traceback__)))
            err.write("error: {}\n".format(e))
            return EXIT_BAD_INPUT
        except OSError as e:
            err.write("error: {}\n".format(e))
            return EXIT_BAD_INPUT
        except Exception:
            self.logger.error("Unexpected error running {}.".format(args.command))
            self.logger.error(traceback.format_exc())
            return EXIT_INVARIANT_FAILED

    def _verify(self, path: str, out: TextIO, err: TextIO) -> int:
        result = CertificateVerifier(self.logger).verify_file(path)
        if result.has_error():
            err.write("verification failed: {}\n".format(result.get_error_msg()))
            return EXIT_VERIFY_FAILED
        out.write("verified {} certificate(s)\n".format(result.certificates))
        return EXIT_OK


app = CommandApp(logging.getLogger("TorusConcordance"))

def _dump(out: TextIO, data) -> None:
    out.write(json.dumps(data, indent=2) + "\n")


@app.command("staircase")
def _staircase(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    knot = TorusKnot(args.p, args.q)
    staircase = from_torus_knot(knot)
    exps = alexander_exponents(staircase)
    S = SemigroupView.of(knot)
    _dump(out, {
        "knot": str(knot),
        "staircase": list(staircase.b),
        "a_tuple": None if staircase.is_trivial() else list(a_tuple(staircase).entries),
        "genus": knot.genus,
        "alexander_exponents": list(exps.alpha),
    })
    if sum(staircase.b) != S.conductor or alexander_polynomial(exps) != semigroup_alexander_polynomial(S):
        app.logger.error("Staircase of {} does not reproduce its Alexander polynomial.".format(knot))
        return EXIT_INVARIANT_FAILED
    return EXIT_OK


@app.command("semigroup")
def _semigroup(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    S = SemigroupView.of(TorusKnot(args.p, args.q))
    limit = args.limit if args.limit is not None else S.conductor + 1
    if limit < 0:
        raise ValueError("--limit must be nonnegative, got {}.".format(limit))
    out.write("# conductor: {}\n".format(S.conductor))
    out.write("# genus: {}\n".format(S.genus))
    out.write("# frobenius: {}\n".format(frobenius_number(S)))
    for n in range(limit):
        out.write("{}\t{}\n".format(n, "member" if contains(S, n) else "gap"))
    return EXIT_OK


@app.command("upsilon")
def _upsilon(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    f = upsilon_of_sum(parse(args.expr))
    t = None
    if args.eval_at is not None:
        try:
            t = Fraction(args.eval_at)
        except (ValueError, ZeroDivisionError):
            raise ValueError("Not a rational number: {!r}".format(args.eval_at)) from None
        value = eval_at(f, t)

    if args.svg is not None:
        with open(args.svg, "w", encoding="utf-8") as stream:
            write_pl_function(stream, "svg", f, SvgWriter())
        app.logger.info("Wrote {}".format(args.svg))
    elif args.json or args.csv:
        write_pl_function(out, "json" if args.json else "csv", f)
    elif t is None:
        write_pl_function(out, "text", f)

    if t is not None:
        out.write(format_rational(value) + "\n")
    return EXIT_OK


@app.command("vanish")
def _vanish(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    knot_sum = parse(args.expr)
    if upsilon_of_sum(knot_sum).is_zero():
        out.write("Upsilon({}) = 0\n".format(knot_sum))
        return EXIT_OK
    out.write("Upsilon({}) != 0\n".format(knot_sum))
    return EXIT_INVARIANT_FAILED


@app.command("recursion")
def _recursion(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    holds = check_recursion(args.q, args.p, args.k)
    _dump(out, {"q": args.q, "p": args.p, "k": args.k, "holds": holds})
    return EXIT_OK if holds else EXIT_INVARIANT_FAILED


@app.command("certify")
def _certify(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    builder = CertificateBuilder(app.logger)
    lower = builder.certify_proposition(args.p, args.q, args.k)
    upper = builder.certify_upper_bound(args.p, args.q, args.k)
    _dump(out, {"proposition": lower.to_json(), "upper_bound": upper.to_json()})
    return EXIT_OK if lower.all_hypotheses_hold() and upper.all_hypotheses_hold() else EXIT_INVARIANT_FAILED


@app.command("family")
def _family(app: CommandApp, args: argparse.Namespace, out: TextIO) -> int:
    rule = DoublingRule(p1=args.p1, k=args.k) if args.rule == DoublingRule.name else RULES[args.rule]()
    family = FamilyBuilder(app.logger).build(args.count, rule)
    _dump(out, {
        "members": [list(m) for m in family.members],
        "knots": [str(k) for k in family.knots],
        "certificate": family.certificate.to_json(),
    })
    if not all(upsilon_of_sum(k).is_zero() for k in family.knots) or not family.certificate.all_hypotheses_hold():
        return EXIT_INVARIANT_FAILED
    return EXIT_OK


def main() -> None:
    argv = sys.argv[1:]
    logger = logging.getLogger("TorusConcordance")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if "--verbose" in argv else logging.WARNING)
    sys.exit(app.run(argv))
