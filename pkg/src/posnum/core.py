"""Number systems: weight schemes, digit ranges, evaluation and presets.

Positions are indexed from the least significant end (position 0 carries
weight 1 in every scheme here).  Numerals are stored and written most
significant digit first, the way dotted Long Count notation reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import LengthError, SystemSpecError, UnsupportedSystemError

__all__ = [
    "Numeral",
    "DigitRange",
    "IntegerInterval",
    "WeightScheme",
    "Power",
    "Explicit",
    "LongCount",
    "Fibonacci",
    "Factorial",
    "NumberSystem",
    "Violation",
    "ValidationResult",
    "as_numeral",
    "evaluate",
    "validate",
    "representable_interval",
    "parse_system_spec",
    "format_system_spec",
    "preset",
    "resolve_system",
    "shift_digits",
    "PRESET_SPECS",
]


@dataclass(frozen=True)
class Numeral:
    """A finite digit sequence, most significant digit first."""

    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if not digits:
            raise ValueError("a numeral needs at least one digit")
        object.__setattr__(self, "digits", digits)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __str__(self):
        return ".".join(str(d) for d in self.digits)

    def digit_at(self, position: int) -> int:
        """Digit at ``position`` counted from the least significant end."""
        return self.digits[len(self.digits) - 1 - position]

    def positional(self) -> tuple[int, ...]:
        """Digits ordered least significant first."""
        return self.digits[::-1]

    @classmethod
    def from_positional(cls, digits: Iterable[int]) -> "Numeral":
        return cls(tuple(digits)[::-1])

    def strip_leading_zeros(self) -> "Numeral":
        digits = self.digits
        i = 0
        while i < len(digits) - 1 and digits[i] == 0:
            i += 1
        return Numeral(digits[i:]) if i else self


NumeralLike = Union[Numeral, str, Sequence[int]]


def as_numeral(n: NumeralLike) -> Numeral:
    """Coerce a dotted string or digit sequence into a :class:`Numeral`."""
    if isinstance(n, Numeral):
        return n
    if isinstance(n, str):
        from .textio import parse_numeral

        return parse_numeral(n)
    return Numeral(tuple(n))


@dataclass(frozen=True)
class DigitRange:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty digit range {self.lo}..{self.hi}")

    @property
    def cardinality(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, d) -> bool:
        return self.lo <= d <= self.hi

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class IntegerInterval:
    """Closed integer interval ``[min, max]``."""

    min: int
    max: int

    def __post_init__(self):
        if self.min > self.max:
            raise ValueError(f"empty interval [{self.min}, {self.max}]")

    def __len__(self):
        return self.max - self.min + 1

    def __iter__(self):
        return iter(range(self.min, self.max + 1))

    def __contains__(self, v) -> bool:
        return self.min <= v <= self.max

    def issuperset(self, other: "IntegerInterval") -> bool:
        return self.min <= other.min and other.max <= self.max


# -- weight schemes ---------------------------------------------------------


class WeightScheme:
    """Positional weights; ``weight(0)`` is always 1."""

    max_positions: int | None = None

    def weight(self, i: int) -> int:
        raise NotImplementedError

    def ratio(self, i: int) -> int | None:
        """``weight(i + 1) / weight(i)`` when it is an integer, else None."""
        hi, lo = self.weight(i + 1), self.weight(i)
        return hi // lo if hi % lo == 0 else None

    # Index from which ratio(i) is constant; None if never.
    stationary_from: int | None = None

    def spec(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Power(WeightScheme):
    base: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("power base must be at least 2")

    def weight(self, i):
        return self.base**i

    @property
    def stationary_from(self):
        return 0

    def spec(self):
        return f"power({self.base})"


@dataclass(frozen=True)
class Explicit(WeightScheme):
    """Explicit weight list, least significant first."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ValueError("weight list is empty")
        if values[0] <= 0 or any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("weights must be positive and strictly increasing")
        object.__setattr__(self, "values", values)

    @property
    def max_positions(self):
        return len(self.values)

    def weight(self, i):
        if not 0 <= i < len(self.values):
            raise LengthError(f"position {i} outside {len(self.values)} explicit weights")
        return self.values[i]

    def ratio(self, i):
        if i + 1 >= len(self.values):
            return None
        return super().ratio(i)

    def spec(self):
        return "weights(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class LongCount(WeightScheme):
    """1, 20, 360, 7200, ... (18 * 20**(i-1) from position 2 on)."""

    max_positions: int | None = None

    def weight(self, i):
        if i == 0:
            return 1
        return 20 if i == 1 else 18 * 20 ** (i - 1)

    @property
    def stationary_from(self):
        return 2

    def spec(self):
        return f"longcount({self.max_positions})"


@lru_cache(maxsize=None)
def _fib_weight(i: int) -> int:
    a, b = 1, 2
    for _ in range(i):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class Fibonacci(WeightScheme):
    """Distinct Fibonacci numbers 1, 2, 3, 5, 8, ..."""

    max_positions: int | None = None

    def weight(self, i):
        return _fib_weight(i)

    def ratio(self, i):
        return None

    def spec(self):
        return f"fib({self.max_positions})"


@dataclass(frozen=True)
class Factorial(WeightScheme):
    """weight(i) = (i + 1)!"""

    max_positions: int | None = None

    def weight(self, i):
        return math.factorial(i + 1)

    def ratio(self, i):
        return i + 2

    def spec(self):
        return f"factorial({self.max_positions})"


# -- systems ----------------------------------------------------------------


@dataclass(frozen=True)
class NumberSystem:
    """Weight scheme plus per-position digit ranges.

    ``overrides`` maps a position to the range used there instead of
    ``default_range``.  It is stored as a sorted tuple of pairs so the
    system stays hashable.
    """

    weights: WeightScheme
    default_range: DigitRange
    overrides: tuple[tuple[int, DigitRange], ...] = field(default=())
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        ov = self.overrides
        if isinstance(ov, Mapping):
            ov = ov.items()
        ov = tuple(sorted((int(k), r) for k, r in ov))
        if len({k for k, _ in ov}) != len(ov):
            raise ValueError("duplicate override position")
        for k, _ in ov:
            if k < 0 or (self.max_positions is not None and k >= self.max_positions):
                raise ValueError(f"override position {k} outside the system")
        object.__setattr__(self, "overrides", ov)

    @property
    def max_positions(self) -> int | None:
        return self.weights.max_positions

    def range_at(self, i: int) -> DigitRange:
        for k, r in self.overrides:
            if k == i:
                return r
        return self.default_range

    def weight(self, i: int) -> int:
        return self.weights.weight(i)

    def check_length(self, length: int):
        if length < 1:
            raise LengthError("length must be positive")
        if self.max_positions is not None and length > self.max_positions:
            raise LengthError(
                f"length {length} exceeds the system's {self.max_positions} positions"
            )

    def __str__(self):
        return self.name or format_system_spec(self)


def evaluate(n: NumeralLike, sys: NumberSystem) -> int:
    """Positional sum of ``n``.  Digits are not range-checked."""
    n = as_numeral(n)
    sys.check_length(len(n))
    return sum(d * sys.weight(i) for i, d in enumerate(n.positional()))


@dataclass(frozen=True)
class Violation:
    position: int
    digit: int
    allowed: DigitRange

    def __str__(self):
        return f"position {self.position}: digit {self.digit} not in {self.allowed}"


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = ()
    length_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.length_ok and not self.violations

    def __bool__(self):
        return self.ok


def validate(n: NumeralLike, sys: NumberSystem) -> ValidationResult:
    n = as_numeral(n)
    length_ok = sys.max_positions is None or len(n) <= sys.max_positions
    violations = tuple(
        Violation(i, d, sys.range_at(i))
        for i, d in enumerate(n.positional())
        if d not in sys.range_at(i)
    )
    return ValidationResult(violations, length_ok)


def representable_interval(sys: NumberSystem, length: int) -> IntegerInterval:
    """Smallest and largest values of numerals with ``length`` positions."""
    sys.check_length(length)
    lo = sum(sys.range_at(i).lo * sys.weight(i) for i in range(length))
    hi = sum(sys.range_at(i).hi * sys.weight(i) for i in range(length))
    return IntegerInterval(lo, hi)


def shift_digits(sys: NumberSystem, s: int, length: int) -> tuple[NumberSystem, int]:
    """Shift every digit range by ``s``.

    Returns the shifted system and the amount by which the value of every
    ``length``-position numeral moves, ``s * sum(weight(i))``.
    """
    if sys.overrides:
        raise UnsupportedSystemError("digit shifting needs a uniform digit range")
    sys.check_length(length)
    r = sys.default_range
    shifted = NumberSystem(sys.weights, DigitRange(r.lo + s, r.hi + s))
    offset = s * sum(sys.weight(i) for i in range(length))
    return shifted, offset


# -- system-spec grammar ----------------------------------------------------


def format_system_spec(sys: NumberSystem) -> str:
    text = f"{sys.weights.spec()}[{sys.default_range}]"
    if sys.overrides:
        text += "{" + ";".join(f"{k}:{r}" for k, r in sys.overrides) + "}"
    return text


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, expected: str, message: str = "invalid system spec"):
        raise SystemSpecError(message, self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str):
        if not self.peek(literal):
            self.fail(repr(literal))
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            self.pos = start
            self.fail("integer")
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


_SCHEMES = ("power", "weights", "longcount", "fib", "factorial")


def parse_system_spec(text: str) -> NumberSystem:
    """Parse ``scheme range override?``, e.g. ``longcount(5)[0..19]{1:0..17}``."""
    cur = _Cursor(text)
    cur.skip_ws()
    for kw in _SCHEMES:
        if cur.peek(kw + "("):
            cur.pos += len(kw) + 1
            break
    else:
        cur.fail(" | ".join(f"'{k}('" for k in _SCHEMES))
    args_at = cur.pos
    args = [cur.integer()]
    while kw == "weights" and cur.peek(","):
        cur.pos += 1
        args.append(cur.integer())
    cur.expect(")")

    def semantic(msg):
        raise SystemSpecError(msg, text, args_at, "")

    try:
        if kw == "power":
            scheme = Power(args[0])
        elif kw == "weights":
            if args[0] != 1:
                semantic("the least significant weight must be 1")
            scheme = Explicit(tuple(args))
        else:
            if args[0] < 1:
                semantic("position count must be positive")
            scheme = {"longcount": LongCount, "fib": Fibonacci, "factorial": Factorial}[kw](
                args[0]
            )
    except ValueError as exc:
        semantic(str(exc))

    default = _parse_range(cur, "[", "]")
    overrides = {}
    if cur.peek("{"):
        cur.pos += 1
        while True:
            key_at = cur.pos
            pos = cur.integer()
            if pos < 0 or (scheme.max_positions is not None and pos >= scheme.max_positions):
                raise SystemSpecError("override position outside the system", text, key_at, "")
            if pos in overrides:
                raise SystemSpecError("duplicate override position", text, key_at, "")
            cur.expect(":")
            overrides[pos] = _parse_range(cur, "", "")
            if cur.peek(";"):
                cur.pos += 1
                continue
            cur.expect("}")
            break
    if not cur.at_end():
        cur.fail("end of input")
    return NumberSystem(scheme, default, overrides)


def _parse_range(cur: _Cursor, open_: str, close: str) -> DigitRange:
    if open_:
        cur.expect(open_)
    at = cur.pos
    lo = cur.integer()
    cur.expect("..")
    hi = cur.integer()
    if close:
        cur.expect(close)
    if lo > hi:
        raise SystemSpecError(f"empty digit range {lo}..{hi}", cur.text, at, "")
    return DigitRange(lo, hi)


# -- presets ----------------------------------------------------------------


def _factorial_spec(positions: int) -> str:
    ov = ";".join(f"{i}:0..{i + 1}" for i in range(1, positions))
    return f"factorial({positions})[0..1]{{{ov}}}"


PRESET_SPECS: dict[str, str] = {
    "decimal": "power(10)[0..9]",
    "bijective10": "power(10)[1..10]",
    "bijective20": "power(20)[1..20]",
    "balanced3": "power(3)[-1..1]",
    "signedbinary": "power(2)[-1..1]",
    "lsd": "weights(1,12,240)[0..9]{0:0..11;1:0..19;2:0..99}",
    "lc-std": "longcount(5)[0..19]{1:0..17}",
    "lc-019": "longcount(5)[0..19]",
    "lc-020": "longcount(5)[0..20]",
    "lc-bij": "longcount(5)[1..20]",
    "fibweights": "weights(1,3,9,27)[-1..1]",
    "zeckendorf": "fib(30)[0..1]",
    "factorial": _factorial_spec(10),
}


def preset(name: str) -> NumberSystem:
    try:
        spec = PRESET_SPECS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_SPECS)}"
        ) from None
    return replace(parse_system_spec(spec), name=name)


def resolve_system(text: Union[str, NumberSystem]) -> NumberSystem:
    """Preset name or inline system spec."""
    if isinstance(text, NumberSystem):
        return text
    if "(" not in text:
        return preset(text)
    return parse_system_spec(text)
