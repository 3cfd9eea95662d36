import json
from fractions import Fraction
from typing import Any, TextIO

from .pl_function import PLFunction

# Supported serializations of a PL function and their media types
FORMATS: dict[str, str] = {
    "json": "application/json",
    "csv": "text/csv",
    "svg": "image/svg+xml",
    "text": "text/plain",
}

def format_rational(x: Fraction) -> str:
    """Render as num/den, or just num for integers."""
    return str(Fraction(x))


def pl_function_to_json(f: PLFunction) -> dict[str, Any]:
    """{"breakpoints": [[num, den], ...], "values": [[num, den], ...]}"""
    return {
        "breakpoints": [[t.numerator, t.denominator] for t in f.breakpoints],
        "values": [[v.numerator, v.denominator] for v in f.values],
    }


def pl_function_from_json(data: dict[str, Any]) -> PLFunction:
    return PLFunction(
        tuple(Fraction(num, den) for num, den in data["breakpoints"]),
        tuple(Fraction(num, den) for num, den in data["values"]),
    )


def pl_function_to_csv(f: PLFunction) -> str:
    lines = ["t,value"]
    for t, v in f.points():
        lines.append("{},{}".format(format_rational(t), format_rational(v)))
    return "\n".join(lines) + "\n"


def pl_function_to_text(f: PLFunction) -> str:
    return "".join("{}\t{}\n".format(format_rational(t), format_rational(v)) for t, v in f.points())


class SvgWriter:
    """
    Renders a PL function as an SVG polyline, t in [0, 2] across the width.
    Coordinates are rounded to floats here and only here.
    """
    width: int
    height: int
    margin: int

    def __init__(self, width: int = 800, height: int = 400, margin: int = 20) -> None:
        if width <= 2 * margin or height <= 2 * margin:
            raise ValueError("The SVG viewbox must be larger than twice the margin.")
        self.width = width
        self.height = height
        self.margin = margin

    def render(self, f: PLFunction) -> str:
        low = min(min(f.values), Fraction(0))
        high = max(max(f.values), Fraction(0))
        span = high - low if high != low else Fraction(1)
        inner_w = self.width - 2 * self.margin
        inner_h = self.height - 2 * self.margin

        def x_of(t: Fraction) -> float:
            return float(self.margin + inner_w * t / 2)

        def y_of(v: Fraction) -> float:
            return float(self.margin + inner_h * (high - v) / span)

        coords = " ".join("{:.3f},{:.3f}".format(x_of(t), y_of(v)) for t, v in f.points())
        axis_y = y_of(Fraction(0))
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">\n'
            '  <line x1="{m}" y1="{ay:.3f}" x2="{xe}" y2="{ay:.3f}" stroke="#999" stroke-width="1"/>\n'
            '  <polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="2"/>\n'
            '</svg>\n'
        ).format(w=self.width, h=self.height, m=self.margin, xe=self.width - self.margin, ay=axis_y, pts=coords)


def write_pl_function(stream: TextIO, fmt: str, f: PLFunction, svg_writer: "SvgWriter | None" = None) -> None:
    """
    Serializes a PL function to the given stream.

    Args:
        stream (TextIO): Where to write.
        fmt (str): One of the keys of FORMATS.
        f (PLFunction): The function.
        svg_writer (SvgWriter | None): Renderer for "svg". Defaults to an 800x400 viewbox.
    """
    if fmt not in FORMATS:
        raise ValueError("Invalid format: {}".format(fmt))
    if fmt == "json":
        stream.write(json.dumps(pl_function_to_json(f)) + "\n")
    elif fmt == "csv":
        stream.write(pl_function_to_csv(f))
    elif fmt == "svg":
        stream.write((svg_writer or SvgWriter()).render(f))
    else:
        stream.write(pl_function_to_text(f))
