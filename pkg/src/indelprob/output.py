"""Exact-to-decimal formatting and CSV emission shared by the CLI and figures."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable, Sequence


def fraction_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction | int, precision: int = 6) -> str:
    """Round half-to-even at ``precision`` digits, computed exactly."""
    if precision < 0:
        raise ValueError(f"precision must be >= 0, got {precision}")
    x = Fraction(x)
    scaled = round(x * 10 ** precision)  # Fraction.__round__ rounds half to even
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    if precision == 0:
        return sign + digits
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
