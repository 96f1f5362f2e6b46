"""Direct conversions: bijective, balanced signed-digit and Zeckendorf forms."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Fibonacci, Numeral, as_numeral
from .errors import DigitRangeError, UnrepresentableError

__all__ = [
    "BalancedSpec",
    "to_bijective",
    "from_bijective",
    "to_balanced",
    "zeckendorf",
    "zeckendorf_normalize",
    "fibonacci_value",
]


def to_bijective(v: int, base: int) -> Numeral:
    """Zeroless base-``base`` digits (1..base) of a positive integer.

    >>> to_bijective(100, 10).digits
    (9, 10)
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if v <= 0:
        raise UnrepresentableError(
            f"{v} has no bijective base-{base} form; only positive integers do"
        )
    out = []
    while v:
        d = (v - 1) % base + 1
        out.append(d)
        v = (v - d) // base
    return Numeral.from_positional(out)


def from_bijective(n, base: int) -> int:
    n = as_numeral(n)
    total = 0
    for d in n.digits:
        if not 1 <= d <= base:
            raise DigitRangeError(f"digit {d} outside bijective range 1..{base}")
        total = total * base + d
    return total


@dataclass(frozen=True)
class BalancedSpec:
    base: int

    def __post_init__(self):
        if self.base < 3 or self.base % 2 == 0:
            raise ValueError("balanced form needs an odd base of at least 3")

    @property
    def bound(self) -> int:
        return (self.base - 1) // 2


def to_balanced(v: int, spec: BalancedSpec | int) -> Numeral:
    """Balanced signed-digit form, digits in ``-(b-1)/2 .. (b-1)/2``.

    Starts from the ordinary base-b digits and removes every digit above
    the bound by rewriting ``d * b**k`` as ``b**(k+1) - (b - d) * b**k``,
    carrying the 1 upwards.  Negative values use the digit-wise negation
    of the form of ``-v``.
    """
    if isinstance(spec, int):
        spec = BalancedSpec(spec)
    b, bound = spec.base, spec.bound
    if v < 0:
        return Numeral(tuple(-d for d in to_balanced(-v, spec).digits))
    digits = []
    while v:
        v, d = divmod(v, b)
        digits.append(d)
    if not digits:
        return Numeral((0,))
    k = 0
    while k < len(digits):
        if digits[k] > bound:
            digits[k] -= b
            if k + 1 == len(digits):
                digits.append(0)
            digits[k + 1] += 1
        k += 1
    return Numeral.from_positional(digits)


def fibonacci_value(n) -> int:
    n = as_numeral(n)
    fib = Fibonacci()
    return sum(d * fib.weight(i) for i, d in enumerate(n.positional()))


def zeckendorf(v: int) -> Numeral:
    """Greedy sum of non-consecutive Fibonacci numbers (weights 1, 2, 3, 5, ...).

    >>> str(zeckendorf(12))
    '1.0.1.0.1'
    """
    if v <= 0:
        raise UnrepresentableError(f"{v} has no Zeckendorf form; only positive integers do")
    fib = Fibonacci()
    top = 0
    while fib.weight(top + 1) <= v:
        top += 1
    digits = [0] * (top + 1)
    i = top
    while v:
        if fib.weight(i) <= v:
            digits[i] = 1
            v -= fib.weight(i)
            i -= 2
        else:
            i -= 1
    return Numeral.from_positional(digits)


def zeckendorf_normalize(n, *, trace: list | None = None) -> Numeral:
    """Apply ``011 -> 100`` until no two neighbouring digits are both 1.

    The highest adjacent pair is rewritten first; the position above it is
    then always 0.  If ``trace`` is given, every intermediate form is appended.
    """
    n = as_numeral(n)
    for d in n.digits:
        if d not in (0, 1):
            raise DigitRangeError(f"digit {d} is not 0 or 1")
    pos = list(n.positional())
    while True:
        hit = None
        for i in range(len(pos) - 1, 0, -1):
            if pos[i] == 1 and pos[i - 1] == 1:
                hit = i
                break
        if hit is None:
            break
        if hit + 1 == len(pos):
            pos.append(0)
        pos[hit + 1] = 1
        pos[hit] = pos[hit - 1] = 0
        if trace is not None:
            trace.append(Numeral.from_positional(pos).strip_leading_zeros())
    return Numeral.from_positional(pos).strip_leading_zeros()
