"""Curve data for the bound-behaviour figures and the VT weight-bound plot."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import bound_udc, bound_uic, bound_usc, weight_bound_uic_0n, weight_bound_uic_0n1n
from .channels import f_uic
from .output import decimal_str, fraction_str
from .vt import VTParams, vt_code
from .words import Word

FIGURES = ("usc-bound", "uic-bound", "udc-bound", "vt-weight")


@dataclass(frozen=True)
class FigureSpec:
    figure: str
    n: int
    t_values: tuple[int, ...]
    q: int = 2
    d: int = 1
    a: int = 0

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"unknown figure {self.figure!r}; choose from {', '.join(FIGURES)}")
        if not self.t_values:
            raise ValueError("empty t range")
        if self.n < 1:
            raise ValueError(f"n={self.n} must be >= 1")
        if self.q < 2:
            raise ValueError(f"q={self.q} must be >= 2")
        if min(self.t_values) < 0:
            raise ValueError("t values must be >= 0")
        if self.figure == "udc-bound":
            if not 1 <= self.d <= self.n:
                raise ValueError(f"d={self.d} outside 1..n={self.n}")
            if not all(1 <= t <= self.n for t in self.t_values):
                raise ValueError(f"udc-bound needs 1 <= t <= n={self.n}")
        if self.figure == "vt-weight":
            if self.q != 2:
                raise ValueError("vt-weight is binary (q=2)")
            VTParams(self.n, self.a)
            if min(self.t_values) < 1:
                raise ValueError("vt-weight needs t >= 1")


@dataclass(frozen=True)
class FigureData:
    spec: FigureSpec
    header: tuple[str, ...]
    rows: tuple[tuple[object, ...], ...]
    exact_columns: tuple[str, ...]

    def csv_rows(self, precision: int = 6) -> tuple[list[str], list[list[str]]]:
        """Exact columns as fractions, each followed by a ``<name>_dec`` decimal column."""
        header: list[str] = []
        for col in self.header:
            header.append(col)
            if col in self.exact_columns:
                header.append(f"{col}_dec")
        out = []
        for row in self.rows:
            line = []
            for col, val in zip(self.header, row):
                if col in self.exact_columns:
                    line += [fraction_str(val), decimal_str(val, precision)]
                else:
                    line.append(str(val))
            out.append(line)
        return header, out


def _vt_weight_bound(n: int, t: int, w: int, has_zero: bool, has_one: bool) -> Fraction:
    # tightest weight bound whose hypotheses hold, falling back to the general bound
    if has_zero and has_one and 1 <= w <= n - 1 and t <= n - 1:
        return weight_bound_uic_0n1n(n, t, w)
    if has_zero and w >= 1:
        return weight_bound_uic_0n(n, 2, t, w)
    return bound_uic(n, 2, t)


def figure_data(spec: FigureSpec) -> FigureData:
    ts = spec.t_values
    if spec.figure == "usc-bound":
        rows = tuple((t, bound_usc(spec.n, spec.q, t)) for t in ts)
        return FigureData(spec, ("t", "bound"), rows, ("bound",))
    if spec.figure == "uic-bound":
        rows = tuple((t, bound_uic(spec.n, spec.q, t)) for t in ts)
        return FigureData(spec, ("t", "bound"), rows, ("bound",))
    if spec.figure == "udc-bound":
        rows = tuple((t, bound_udc(spec.n, spec.q, t, spec.d)) for t in ts)
        return FigureData(spec, ("t", "bound"), rows, ("bound",))

    code = vt_code(VTParams(spec.n, spec.a))
    n = spec.n
    has_zero = Word.constant(0, n) in code
    has_one = Word.constant(1, n) in code
    by_weight: dict[int, list[Word]] = {}
    for c in code:
        by_weight.setdefault(c.weight, []).append(c)
    rows = []
    for t in ts:
        for w in sorted(by_weight):
            fs = [f_uic(c, code, t) for c in by_weight[w]]
            rows.append((t, w, _vt_weight_bound(n, t, w, has_zero, has_one), min(fs), max(fs)))
    return FigureData(
        spec,
        ("t", "weight", "bound", "f_exact_min", "f_exact_max"),
        tuple(rows),
        ("bound", "f_exact_min", "f_exact_max"),
    )
