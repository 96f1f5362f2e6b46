"""Command-line front end.

Exit status is 0 on success, 1 for domain errors (unrepresentable values,
failed validation, inconsistent calendar triples) and 2 for usage or
parse errors.  Domain errors print one ``error: <kind>: <reason>`` line
on standard error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from dataclasses import dataclass

from . import arith, core, mayacal, redundancy, special, textio
from .errors import ParseError, PosnumError

__all__ = ["CommandOutcome", "run", "main", "build_parser"]


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout: str
    stderr: str = ""


class _DomainFailure(Exception):
    """A command finished with a negative domain answer (exit 1)."""

    def __init__(self, kind, reason, lines=()):
        super().__init__(reason)
        self.kind = kind
        self.lines = list(lines)


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []

    def header(self, *cols):
        if self.fmt == "tsv":
            self.lines.append("\t".join(cols))

    def row(self, *cols, text=None):
        """``text`` replaces the tab-joined row in text mode."""
        if self.fmt == "tsv" or text is None:
            self.lines.append("\t".join(str(c) for c in cols))
        else:
            self.lines.append(text)


# -- helpers ----------------------------------------------------------------


def _system(args) -> core.NumberSystem:
    try:
        return core.resolve_system(args.system)
    except KeyError as exc:
        raise ParseError(str(exc.args[0]), args.system, 0, "preset name or system spec")


def _numeral(text: str, args) -> core.Numeral:
    return textio.parse_numeral(text, args.notation or textio.DOTTED)


def _show(n: core.Numeral, args, default=textio.DOTTED) -> str:
    return textio.format_numeral(n, args.notation or default)


def _max_pos(args, sys_, *values) -> int:
    if args.max_pos is not None:
        return args.max_pos
    if sys_.max_positions is not None:
        return sys_.max_positions
    return max(redundancy.positions_for(sys_, v) for v in values)


def _interval(args) -> core.IntegerInterval:
    if args.lo > args.hi:
        raise ParseError("empty range", f"{args.lo}..{args.hi}", 0, "--from <= --to")
    return core.IntegerInterval(args.lo, args.hi)


def _lc(text: str) -> mayacal.LongCountDate:
    return mayacal.LongCountDate(textio.parse_numeral(text))


# -- number-system commands -------------------------------------------------


def cmd_eval(args, out):
    sys_ = _system(args)
    out.header("numeral", "value")
    for text in args.numerals:
        n = _numeral(text, args)
        out.row(text, core.evaluate(n, sys_), text=str(core.evaluate(n, sys_)))


def cmd_validate(args, out):
    sys_ = _system(args)
    out.header("numeral", "result")
    failed = []
    for text in args.numerals:
        res = core.validate(_numeral(text, args), sys_)
        if res.ok:
            out.row(text, "ok", text="ok")
        else:
            reasons = [str(v) for v in res.violations]
            if not res.length_ok:
                reasons.append(f"longer than {sys_.max_positions} positions")
            out.row(text, "; ".join(reasons), text="invalid: " + "; ".join(reasons))
            failed.append(text)
    if failed:
        raise _DomainFailure("validation", f"{len(failed)} numeral(s) invalid in {sys_}")


def cmd_repr(args, out):
    sys_ = _system(args)
    out.header("value", "numeral")
    for v in args.values:
        shown = _show(arith.canonicalize(v, sys_), args)
        out.row(v, shown, text=shown)


def cmd_add(args, out):
    sys_ = _system(args)
    result = _show(arith.add(_numeral(args.a, args), _numeral(args.b, args), sys_), args)
    out.header("sum")
    out.row(result)


def cmd_compare(args, out):
    sys_ = _system(args)
    word = {-1: "less", 0: "equal", 1: "greater"}[
        arith.compare(_numeral(args.a, args), _numeral(args.b, args), sys_)
    ]
    out.header("ordering")
    out.row(word)


def cmd_enum(args, out):
    sys_ = _system(args)
    mp = _max_pos(args, sys_, args.value)
    rs = redundancy.enumerate_representations(
        args.value, sys_, mp, no_adjacent_ones=args.no_adjacent_ones
    )
    out.header("value", "numeral")
    for n in rs.members:
        shown = _show(n, args)
        out.row(args.value, shown, text=shown)


def cmd_count(args, out):
    sys_ = _system(args)
    mp = _max_pos(args, sys_, args.value)
    c = redundancy.count_representations(
        args.value, sys_, mp, no_adjacent_ones=args.no_adjacent_ones
    )
    out.header("value", "count")
    out.row(args.value, c, text=str(c))


def _audit(args):
    sys_ = _system(args)
    rng = _interval(args)
    mp = _max_pos(args, sys_, rng.min, rng.max)
    return redundancy.audit(
        sys_, rng, mp, no_adjacent_ones=args.no_adjacent_ones, budget=args.budget
    )


def _audit_lines(report, args, which):
    notation = args.notation or textio.DOTTED
    lines = []
    if "nonunique" in which:
        lines += [(s.value, f"{s.value}\t{len(s)}\t" + ",".join(s.strings(notation)))
                  for s in report.non_unique]
    if "gaps" in which:
        lines += [(g, f"{g}\tGAP") for g in report.gaps]
    return [t for _, t in sorted(lines, key=lambda p: p[0])]


def cmd_audit_unique(args, out):
    report = _audit(args)
    out.header("value", "count", "forms")
    out.lines += _audit_lines(report, args, ("nonunique",))


def cmd_audit_complete(args, out):
    report = _audit(args)
    out.header("value", "status")
    out.lines += _audit_lines(report, args, ("gaps",))


def cmd_fraction(args, out):
    report = _audit(args)
    f = report.fraction_redundant
    out.header("nonunique", "total", "fraction")
    out.row(len(report.non_unique), len(report.range), f, text=str(f))


def cmd_shift(args, out):
    sys_ = _system(args)
    shifted, offset = core.shift_digits(sys_, args.shift, args.length)
    out.header("system", "offset")
    spec = core.format_system_spec(shifted)
    if out.fmt == "tsv":
        out.row(spec, offset)
    else:
        out.lines += [f"system {spec}", f"offset {offset}"]


def cmd_convert(args, out):
    mode = args.mode
    if mode == "bijective":
        default = textio.BIJECTIVE_X if args.base == 10 else textio.DOTTED
        result = _show(special.to_bijective(int(args.input), args.base), args, default)
    elif mode == "from-bijective":
        notation = args.notation or (textio.BIJECTIVE_X if args.base == 10 else textio.DOTTED)
        result = str(special.from_bijective(textio.parse_numeral(args.input, notation), args.base))
    elif mode == "balanced":
        result = _show(special.to_balanced(int(args.input), args.base), args)
    elif mode == "zeckendorf":
        result = _show(special.zeckendorf(int(args.input)), args)
    else:
        result = _show(special.zeckendorf_normalize(_numeral(args.input, args)), args)
    out.header("result")
    out.row(result)


def cmd_roman(args, out):
    out.header("input", "result")
    for text in args.inputs:
        if text.lstrip("-").isdigit():
            result = textio.roman_format(int(text), "additive" if args.additive else "subtractive")
        else:
            result = str(textio.roman_parse(text))
        out.row(text, result, text=result)


# -- calendar commands ------------------------------------------------------


def cmd_maya(args, out):
    op = args.op
    a = args.args

    def need(n):
        if len(a) != n:
            raise ParseError(f"maya {op} takes {n} argument(s)", " ".join(a), 0,
                             f"{n} argument(s)")

    if op == "lc2day":
        need(1)
        out.header("long_count", "days")
        d = mayacal.lc_to_daycount(_lc(a[0]))
        out.row(a[0], d, text=str(d))
    elif op == "day2lc":
        need(1)
        lc = mayacal.daycount_to_lc(int(a[0]))
        out.header("days", "long_count")
        out.row(a[0], lc, text=str(lc))
    elif op == "lc2date":
        need(1)
        lc = _lc(a[0])
        jdn = mayacal.daycount_to_jdn(mayacal.lc_to_daycount(lc))
        date = mayacal.civil_from_jdn(jdn)
        wd = mayacal.weekday_of(jdn)
        out.header("long_count", "jdn", "date", "weekday")
        out.row(lc, jdn, date, wd, text=f"{date.display()} {wd}")
    elif op == "date2lc":
        need(1)
        lc = mayacal.civil_to_lc(mayacal.CivilDate.parse(a[0]))
        out.header("date", "long_count")
        out.row(a[0], lc, text=str(lc))
    elif op in ("tzolkin", "haab", "round"):
        need(1)
        d = mayacal.lc_to_daycount(_lc(a[0]))
        t, h = mayacal.calendar_round_of(d)
        value = {"tzolkin": str(t), "haab": str(h), "round": f"{t} {h}"}[op]
        out.header("long_count", op)
        out.row(a[0], value, text=value)
    elif op == "solve-round":
        need(2)
        if args.lo is None or args.hi is None:
            raise ParseError("solve-round needs a window", "", 0, "--from and --to")
        t = mayacal.TzolkinDate.parse(a[0])
        h = mayacal.HaabDate.parse(a[1])
        out.header("days", "long_count")
        for d in mayacal.solve_calendar_round(t, h, args.lo, args.hi):
            lc = mayacal.daycount_to_lc(d) if d >= 0 else ""
            out.row(d, lc, text=f"{d} {lc}".rstrip())
    elif op == "verify":
        need(3)
        check = mayacal.verify_triple(
            _lc(a[0]), mayacal.TzolkinDate.parse(a[1]), mayacal.HaabDate.parse(a[2])
        )
        out.header("result", "mismatches")
        if check.consistent:
            out.row("consistent", "", text="consistent")
        else:
            out.row("inconsistent", ",".join(check.mismatches), text="inconsistent")
            raise _DomainFailure("verify", str(check))
    elif op == "weekday":
        need(1)
        if "-" in a[0].lstrip("-"):
            jdn = mayacal.jdn_from_civil(mayacal.CivilDate.parse(a[0]))
        else:
            jdn = mayacal.daycount_to_jdn(mayacal.lc_to_daycount(_lc(a[0])))
        wd = mayacal.weekday_of(jdn)
        out.header("input", "weekday")
        out.row(a[0], wd, text=str(wd))


MAYA_OPS = ("lc2day", "day2lc", "lc2date", "date2lc", "tzolkin", "haab", "round",
            "solve-round", "verify", "weekday")


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", default="decimal",
                        help="preset name or system spec, e.g. 'longcount(5)[0..19]{1:0..17}'")
    common.add_argument("--max-pos", type=int, dest="max_pos", default=None)
    common.add_argument("--notation", choices=textio.KINDS, default=None)
    common.add_argument("--format", choices=("text", "tsv"), default="text", dest="fmt")

    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument("--from", type=int, dest="lo", required=True)
    ranged.add_argument("--to", type=int, dest="hi", required=True)
    ranged.add_argument("--no-adjacent-ones", action="store_true")
    ranged.add_argument("--budget", type=int, default=redundancy.DEFAULT_BUDGET)

    parser = argparse.ArgumentParser(
        prog="posnum", description="Positional number systems and Maya calendar arithmetic."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, parents=(common,), **kw):
        p = sub.add_parser(name, parents=list(parents), **kw)
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, help="value of numerals").add_argument("numerals", nargs="+")
    add("validate", cmd_validate, help="check digit ranges").add_argument("numerals", nargs="+")
    add("repr", cmd_repr, help="canonical numeral of integers").add_argument(
        "values", nargs="+", type=int)
    for name, func, text in (("add", cmd_add, "sum of two numerals, canonical"),
                             ("compare", cmd_compare, "order of two numerals by value")):
        p = add(name, func, help=text)
        p.add_argument("a")
        p.add_argument("b")
    for name, func, text in (("enum", cmd_enum, "every form of a value"),
                             ("count", cmd_count, "number of forms of a value")):
        p = add(name, func, help=text)
        p.add_argument("value", type=int)
        p.add_argument("--no-adjacent-ones", action="store_true")
    add("audit-unique", cmd_audit_unique, (common, ranged), help="values with several forms")
    add("audit-complete", cmd_audit_complete, (common, ranged), help="unrepresentable values")
    add("fraction", cmd_fraction, (common, ranged), help="share of redundant values")
    p = add("shift", cmd_shift, help="shift all digit ranges")
    p.add_argument("--shift", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p = add("convert", cmd_convert, help="bijective / balanced / Zeckendorf conversions")
    p.add_argument("mode", choices=("bijective", "from-bijective", "balanced", "zeckendorf",
                                    "zeck-normalize"))
    p.add_argument("input")
    p.add_argument("--base", type=int, default=10)
    p = add("maya", cmd_maya, help="Maya calendar operations")
    p.add_argument("op", choices=MAYA_OPS)
    p.add_argument("args", nargs="*")
    p.add_argument("--from", type=int, dest="lo", default=None)
    p.add_argument("--to", type=int, dest="hi", default=None)
    p = add("roman", cmd_roman, help="Roman numeral to integer or back")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--additive", action="store_true", help="write 4 as IIII, 9 as VIIII")
    return parser


def _kind(exc: Exception) -> str:
    name = type(exc).__name__
    return name[:-5].lower() if name.endswith("Error") else name.lower()


def run(argv=None) -> CommandOutcome:
    """Parse ``argv`` and execute, capturing output instead of exiting."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    err = io.StringIO()
    with contextlib.redirect_stderr(err), contextlib.redirect_stdout(io.StringIO()) as so:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
            return CommandOutcome(code, so.getvalue(), err.getvalue())
    out = _Output(args.fmt)
    try:
        args.func(args, out)
    except _DomainFailure as exc:
        text = "\n".join(out.lines)
        return CommandOutcome(1, text + "\n" if text else "", f"error: {exc.kind}: {exc}\n")
    except ParseError as exc:
        return CommandOutcome(2, "", f"error: parse: {exc}\n")
    except PosnumError as exc:
        return CommandOutcome(1, "", f"error: {_kind(exc)}: {exc}\n")
    except ValueError as exc:
        return CommandOutcome(2, "", f"error: usage: {exc}\n")
    text = "\n".join(out.lines)
    return CommandOutcome(0, text + "\n" if text else "")


def main(argv=None) -> int:
    outcome = run(argv)
    sys.stdout.write(outcome.stdout)
    sys.stderr.write(outcome.stderr)
    return outcome.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
