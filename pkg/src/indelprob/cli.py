"""Command-line interface: ``indelprob {bound,exact,vt,figure}``.

Exit codes: 0 success, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds
from .channels import (Channel, ChannelDomainError, ChannelKind, DecodingReport,
                       monte_carlo_report, report)
from .figures import FIGURES, FigureSpec, figure_data
from .output import decimal_str, fraction_str, to_csv
from .vt import (DecodingFailure, VTParams, decode_one_deletion, decode_one_insertion,
                 decode_two_insertions_scan, is_codeword, vt_code)
from .words import CodeFileError, Word, read_code


class UsageError(Exception):
    exit_code = 2


class DomainError(Exception):
    exit_code = 3


def _value_line(value: Fraction, precision: int) -> str:
    return f"{fraction_str(value)} ≈ {decimal_str(value, precision)}"


def cmd_bound(args) -> str:
    which = args.which
    need = {
        "usc": ("n", "t"), "uic": ("n", "t"), "udc": ("n", "t", "d"),
        "weight-uic-0n1n": ("n", "t", "w"), "weight-uic-0n": ("n", "t", "w"),
        "weight-udc-0n1n": ("n", "t", "w"),
        "min-intersection": ("n1", "n2", "t1", "t2"),
        "histories-covering": ("n", "t"),
    }[which]
    missing = [f"--{k.replace('_', '-')}" for k in need if getattr(args, k) is None]
    if missing:
        raise UsageError(f"bound {which} requires {' '.join(missing)}")
    a = args
    if which in ("weight-uic-0n1n", "weight-udc-0n1n") and a.q != 2:
        raise UsageError(f"bound {which} is for binary codes, got --q {a.q}")
    try:
        if which == "min-intersection":
            return str(bounds.min_intersection(a.n1, a.n2, a.t1, a.t2, a.q)) + "\n"
        if which == "histories-covering":
            return str(bounds.count_histories_covering(a.n, a.q, a.t)) + "\n"
        value = {
            "usc": lambda: bounds.bound_usc(a.n, a.q, a.t),
            "uic": lambda: bounds.bound_uic(a.n, a.q, a.t),
            "udc": lambda: bounds.bound_udc(a.n, a.q, a.t, a.d),
            "weight-uic-0n1n": lambda: bounds.weight_bound_uic_0n1n(a.n, a.t, a.w),
            "weight-uic-0n": lambda: bounds.weight_bound_uic_0n(a.n, a.q, a.t, a.w),
            "weight-udc-0n1n": lambda: bounds.weight_bound_udc_0n1n(a.n, a.t, a.w),
        }[which]()
    except ValueError as exc:
        raise UsageError(f"bound {which}: {exc}") from None
    return _value_line(value, args.precision) + "\n"


def _report_csv(rep: DecodingReport, precision: int, per_codeword: bool, mode: str | None) -> str:
    header = ["codeword", "favorable", "total", "f"] + (["mode"] if mode else [])
    tail = [mode] if mode else []
    rows = []
    if per_codeword:
        for c, (fav, tot) in rep.counts.items():
            rows.append([str(c), fav, tot, decimal_str(Fraction(fav, tot), precision), *tail])
    for label, val in (("W", rep.W), ("U", rep.U)):
        rows.append([label, val.numerator, val.denominator, decimal_str(val, precision), *tail])
    return to_csv(header, rows)


def cmd_exact(args) -> str:
    try:
        code = read_code(args.code)
    except CodeFileError as exc:
        raise UsageError(f"{args.code}: {exc}") from None
    except OSError as exc:
        raise UsageError(f"cannot read code file: {exc}") from None
    kind = ChannelKind(Channel(args.channel), args.t)
    if kind.channel.deletes and args.t > code.n:
        raise DomainError(f"{kind}: t={args.t} exceeds codeword length n={code.n}")
    if args.mc:
        if kind.channel not in (Channel.UIC, Channel.UDC):
            raise UsageError("--mc is only available for uic and udc")
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        rep = monte_carlo_report(code, kind, args.trials, args.seed)
        return _report_csv(rep, args.precision, args.per_codeword, "mc")
    try:
        rep = report(code, kind)
    except ChannelDomainError as exc:
        raise DomainError(str(exc)) from None
    return _report_csv(rep, args.precision, args.per_codeword, None)


def _vt_params(n: int, a: int) -> VTParams:
    try:
        return VTParams(n, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_vt(args) -> str:
    if args.vt_command == "gen":
        p = _vt_params(args.n, args.a)
        return "".join(f"{c}\n" for c in vt_code(p))
    if args.vt_command == "decode":
        p = _vt_params(args.n, args.a)
        try:
            r = Word.from_str(args.received, 2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        n = p.n
        try:
            if len(r) == n:
                return (f"{r}\n" if is_codeword(p, r) else "NONE\n")
            if len(r) == n - 1:
                return f"{decode_one_deletion(p, r)}\n"
            if len(r) == n + 1:
                return f"{decode_one_insertion(p, r)}\n"
        except DecodingFailure:
            return "NONE\n"
        if len(r) == n + 2:
            res = decode_two_insertions_scan(p, r)
            if res.status == "unique":
                return f"{res.codeword}\n"
            if res.status == "ambiguous":
                return "AMBIGUOUS:" + ",".join(map(str, res.candidates)) + "\n"
            return "NONE\n"
        raise UsageError(f"received length {len(r)} not in {n - 1}..{n + 2} for n={n}")
    # sweep
    if args.n < 1:
        raise UsageError(f"n={args.n} must be >= 1")
    kind = ChannelKind(Channel(args.channel), args.t)
    if kind.channel.deletes and args.t > args.n:
        raise DomainError(f"{kind}: t={args.t} exceeds n={args.n}")
    rows = []
    for a in range(args.n + 1):
        code = vt_code(VTParams(args.n, a))
        rep = report(code, kind)
        rows.append([a, code.M, fraction_str(rep.W), decimal_str(rep.W, args.precision),
                     fraction_str(rep.U), decimal_str(rep.U, args.precision)])
    return to_csv(["a", "M", "W", "W_dec", "U", "U_dec"], rows)


def cmd_figure(args) -> str:
    t_min = args.t_min
    t_max = args.t_max
    if t_max is None:
        t_max = args.n - 1 if args.figure == "vt-weight" else args.n
    try:
        spec = FigureSpec(args.figure, args.n, tuple(range(t_min, t_max + 1)),
                          q=args.q, d=args.d, a=args.a)
    except ValueError as exc:
        raise UsageError(f"figure {args.figure}: {exc}") from None
    data = figure_data(spec)
    if args.plot:
        from .plotting import render
        render(data, args.plot)
    header, rows = data.csv_rows(args.precision)
    return to_csv(header, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indelprob",
        description="Unique decoding from insertions and deletions: bounds, exact channel "
                    "evaluation, VT codes and figure data.")
    parser.add_argument("--precision", type=int, default=6,
                        help="decimal digits in printed values (default 6)")
    parser.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", type=Path, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("which", choices=["usc", "uic", "udc", "weight-uic-0n1n", "weight-uic-0n",
                                     "weight-udc-0n1n", "min-intersection", "histories-covering"])
    for name in ("n", "t", "d", "w", "n1", "n2", "t1", "t2"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("exact", parents=[common], help="exact f, W and U for a code file")
    p.add_argument("--code", required=True, type=Path)
    p.add_argument("--channel", required=True, choices=[c.value for c in Channel])
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--per-codeword", action="store_true")
    p.add_argument("--mc", action="store_true", help="Monte Carlo estimate (uic/udc only)")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("vt", parents=[common], help="Varshamov-Tenengolts code tools")
    vt_sub = p.add_subparsers(dest="vt_command", required=True)
    g = vt_sub.add_parser("gen", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--a", type=int, default=0)
    g = vt_sub.add_parser("decode", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--a", type=int, default=0)
    g.add_argument("--received", required=True)
    g = vt_sub.add_parser("sweep", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--channel", required=True, choices=[c.value for c in Channel])
    g.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_vt)

    p = sub.add_parser("figure", parents=[common], help="curve data (CSV) for a figure")
    p.add_argument("figure", choices=FIGURES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--t-min", type=int, default=1)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--plot", type=Path, default=None, help="also render the curves to this image file")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 0:
        parser.error("--precision must be >= 0")
    try:
        text = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"indelprob: error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
