"""Canonical forms, carrying addition and comparison in regular systems.

A system is *regular* when every weight ratio ``weight(i+1) / weight(i)``
is an integer ``m_i >= 2`` and the digit range at position ``i`` holds
exactly ``m_i`` consecutive values.  The most significant position of a
bounded system has no ratio, so its range is free.  In such a system
every numeral of a given length is a distinct value, which is what makes
plain div/mod digit extraction exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Numeral,
    NumberSystem,
    as_numeral,
    evaluate,
    representable_interval,
    validate,
)
from .errors import DigitRangeError, LengthError, UnrepresentableError, UnsupportedSystemError

__all__ = ["RegularSystemView", "regular_view", "canonicalize", "add", "compare"]

# Extra positions allowed beyond the value's bit length before an unbounded
# digit extraction is declared non-terminating.
_SLACK = 8


@dataclass(frozen=True)
class RegularSystemView:
    sys: NumberSystem

    def ratio(self, i: int) -> int | None:
        """Radix at position ``i``; None for the free top position."""
        mp = self.sys.max_positions
        if mp is not None and i >= mp - 1:
            return None
        return self.sys.weights.ratio(i)

    def digit_step(self, value: int, i: int) -> tuple[int, int]:
        """Split ``value`` (in units of weight(i)) into digit and carry."""
        r = self.sys.range_at(i)
        m = self.ratio(i)
        if m is None:
            if value not in r:
                raise LengthError(
                    f"{value} does not fit the top digit range {r} of a "
                    f"{self.sys.max_positions}-position system"
                )
            return value, 0
        d = (value - r.lo) % m + r.lo
        return d, (value - d) // m


def regular_view(sys: NumberSystem) -> RegularSystemView:
    """Return the regular view of ``sys`` or raise UnsupportedSystemError."""
    mp = sys.max_positions
    if mp is not None:
        horizon = range(mp - 1)
    else:
        start = getattr(sys.weights, "stationary_from", None)
        if start is None:
            raise UnsupportedSystemError(
                f"{sys}: unbounded weights with varying ratios have no canonical form"
            )
        last_override = max((k for k, _ in sys.overrides), default=-1)
        horizon = range(max(start, last_override + 1) + 1)
    for i in horizon:
        m = sys.weights.ratio(i)
        if m is None or m < 2:
            raise UnsupportedSystemError(
                f"{sys}: weight ratio at position {i} is not an integer >= 2"
            )
        card = sys.range_at(i).cardinality
        if card != m:
            raise UnsupportedSystemError(
                f"{sys}: position {i} has {card} digits but weight ratio {m}; "
                "representations are not unique, use enumeration instead"
            )
    return RegularSystemView(sys)


def _describe_representable(sys: NumberSystem) -> str:
    r0 = sys.range_at(0)
    if sys.max_positions is not None:
        iv = representable_interval(sys, sys.max_positions)
        return f"values in [{iv.min}, {iv.max}] reachable with {sys.max_positions} positions"
    if r0.lo > 0:
        return "positive integers"
    if r0.hi < 0:
        return "negative integers"
    if r0.lo == 0:
        return "non-negative integers"
    if r0.hi == 0:
        return "non-positive integers"
    return "all integers"


def _extract(view: RegularSystemView, v: int) -> Numeral:
    """Digits of ``v`` by repeated div/mod, least significant first."""
    sys = view.sys
    original = v
    out: list[int] = []
    limit = sys.max_positions
    if limit is None:
        last_override = max((k for k, _ in sys.overrides), default=0)
        limit = abs(v).bit_length() + last_override + _SLACK
    i = 0
    if v == 0:
        if 0 in sys.range_at(0):
            return Numeral((0,))
        raise UnrepresentableError(
            f"0 is not representable in {sys} (no zero digit); "
            f"representable: {_describe_representable(sys)}"
        )
    while v != 0:
        if i >= limit:
            raise UnrepresentableError(
                f"{original} is not representable in {sys}; "
                f"representable: {_describe_representable(sys)}"
            )
        try:
            d, v = view.digit_step(v, i)
        except LengthError:
            raise UnrepresentableError(
                f"{original} is not representable in {sys}; "
                f"representable: {_describe_representable(sys)}"
            ) from None
        out.append(d)
        i += 1
    return Numeral.from_positional(out)


def canonicalize(v: int, sys: NumberSystem) -> Numeral:
    """The unique leading-zero-free numeral for ``v`` in a regular system.

    >>> from posnum.core import preset
    >>> str(canonicalize(390, preset("lc-std")))
    '1.1.10'
    >>> str(canonicalize(22, preset("balanced3")))
    '1.-1.1.1'
    """
    return _extract(regular_view(sys), v)


def add(a, b, sys: NumberSystem) -> Numeral:
    """Digit-wise sum with carries, canonical result.

    Each position keeps ``((s - lo) mod m) + lo`` and carries
    ``(s - lo) // m`` into the next one.
    """
    view = regular_view(sys)
    a, b = as_numeral(a), as_numeral(b)
    for n in (a, b):
        res = validate(n, sys)
        if not res:
            raise DigitRangeError(f"{n} is not a valid numeral of {sys}: "
                                  + "; ".join(map(str, res.violations)))
    pa, pb = a.positional(), b.positional()
    width = max(len(pa), len(pb))
    limit = sys.max_positions
    out: list[int] = []
    carry = 0
    i = 0
    while i < width or carry != 0:
        if limit is not None and i >= limit:
            raise LengthError(f"sum of {a} and {b} overflows {limit} positions of {sys}")
        if limit is None and i > width + abs(carry).bit_length() + _SLACK:
            raise UnrepresentableError(f"sum of {a} and {b} is not representable in {sys}")
        s = carry
        s += pa[i] if i < len(pa) else 0
        s += pb[i] if i < len(pb) else 0
        try:
            d, carry = view.digit_step(s, i)
        except LengthError:
            raise LengthError(
                f"sum of {a} and {b} overflows the top position of {sys}"
            ) from None
        out.append(d)
        i += 1
    result = Numeral.from_positional(out).strip_leading_zeros()
    if result.digits == (0,) and 0 not in sys.range_at(0):
        raise UnrepresentableError(f"the sum is 0, which {sys} cannot represent")
    return result


def compare(a, b, sys: NumberSystem) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    va, vb = evaluate(a, sys), evaluate(b, sys)
    return (va > vb) - (va < vb)
