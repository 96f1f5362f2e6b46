"""Numeral notations: dotted digits, bijective glyphs and Roman numerals."""

from __future__ import annotations

import string
from typing import Iterable

from .core import Numeral
from .errors import DigitRangeError, ParseError

__all__ = [
    "DOTTED",
    "BIJECTIVE_X",
    "ROMAN",
    "BIJECTIVE_GLYPHS",
    "parse_numeral",
    "format_numeral",
    "roman_parse",
    "roman_format",
]

DOTTED = "dotted"
BIJECTIVE_X = "bijectiveX"
ROMAN = "roman"
KINDS = (DOTTED, BIJECTIVE_X)

# 1..9, then X for ten, then the remaining capitals for 11 upwards.
BIJECTIVE_GLYPHS = "123456789X" + "".join(c for c in string.ascii_uppercase if c != "X")
_GLYPH_VALUE = {g: i + 1 for i, g in enumerate(BIJECTIVE_GLYPHS)}


def _offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _fail(text, index, expected, message="invalid numeral"):
    raise ParseError(message, text, _offset(text, index), expected)


def parse_numeral(text: str, kind: str = DOTTED) -> Numeral:
    """Parse ``text`` into a numeral (most significant digit first).

    >>> parse_numeral("9.13.20.0.0").digits
    (9, 13, 20, 0, 0)
    >>> parse_numeral("9X", "bijectiveX").digits
    (9, 10)
    """
    if kind == DOTTED:
        return _parse_dotted(text)
    if kind == BIJECTIVE_X:
        return _parse_bijective(text)
    raise ValueError(f"unknown notation {kind!r}")


def _parse_dotted(text: str) -> Numeral:
    digits = []
    i, n = 0, len(text)
    while True:
        start = i
        if i < n and text[i] == "-":
            i += 1
        j = i
        while j < n and text[j] in string.digits:
            j += 1
        if j == i:
            _fail(text, j, "decimal digit" if j > start else "'-' or decimal digit")
        digits.append(int(text[start:j]))
        i = j
        if i == n:
            break
        if text[i] != ".":
            _fail(text, i, "'.' or end of input")
        i += 1
    return Numeral(tuple(digits))


def _parse_bijective(text: str) -> Numeral:
    if not text:
        _fail(text, 0, "bijective digit glyph")
    digits = []
    for i, ch in enumerate(text):
        try:
            digits.append(_GLYPH_VALUE[ch])
        except KeyError:
            _fail(text, i, f"bijective digit glyph ({BIJECTIVE_GLYPHS[0]}..{BIJECTIVE_GLYPHS[-1]})")
    return Numeral(tuple(digits))


def format_numeral(n: Numeral | Iterable[int], kind: str = DOTTED) -> str:
    digits = tuple(n.digits if isinstance(n, Numeral) else n)
    if kind == DOTTED:
        return ".".join(str(d) for d in digits)
    if kind == BIJECTIVE_X:
        out = []
        for d in digits:
            if not 1 <= d <= len(BIJECTIVE_GLYPHS):
                raise DigitRangeError(
                    f"digit {d} has no bijective glyph (1..{len(BIJECTIVE_GLYPHS)})"
                )
            out.append(BIJECTIVE_GLYPHS[d - 1])
        return "".join(out)
    raise ValueError(f"unknown notation {kind!r}")


# -- Roman numerals ---------------------------------------------------------

_PLACES = (("M", "", ""), ("C", "D", "M"), ("X", "L", "C"), ("I", "V", "X"))
_PLACE_VALUE = (1000, 100, 10, 1)


def _place_forms(one, five, ten, thousands=False):
    """All accepted spellings of 1..9 at one decimal place, longest first."""
    if thousands:
        forms = {one * k: k for k in range(1, 4)}
    else:
        forms = {}
        for k in range(1, 10):
            if k < 5:
                forms[one * k] = k
            else:
                forms[five + one * (k - 5)] = k
        forms[one + five] = 4
        forms[one + ten] = 9
    return sorted(forms.items(), key=lambda kv: -len(kv[0]))


_FORMS = [_place_forms(*p, thousands=(i == 0)) for i, p in enumerate(_PLACES)]


def roman_parse(text: str) -> int:
    """Value of a Roman numeral in subtractive or additive spelling.

    Each decimal place is read separately, so ``IV`` and ``IIII`` are both
    4 while forms such as ``IL`` or ``VX`` are rejected.
    """
    if not text:
        _fail(text, 0, "Roman numeral symbol", "invalid Roman numeral")
    pos, total = 0, 0
    for forms, (one, five, ten), scale in zip(_FORMS, _PLACES, _PLACE_VALUE):
        for spelling, value in forms:
            if text.startswith(spelling, pos):
                pos += len(spelling)
                total += value * scale
                break
        if pos == len(text):
            break
    if pos != len(text):
        if pos == 0:
            expected = "one of M, D, C, L, X, V, I"
        else:
            expected = "end of numeral or a symbol of a lower place"
        _fail(text, pos, expected, "invalid Roman numeral")
    return total


def roman_format(v: int, mode: str = "subtractive") -> str:
    if not 1 <= v <= 3999:
        raise DigitRangeError(f"{v} outside the Roman range 1..3999")
    if mode not in ("subtractive", "additive"):
        raise ValueError(f"unknown Roman mode {mode!r}")
    out = []
    for (one, five, ten), scale in zip(_PLACES, _PLACE_VALUE):
        k, v = divmod(v, scale)
        if k == 0:
            continue
        if mode == "subtractive" and k == 4:
            out.append(one + five)
        elif mode == "subtractive" and k == 9:
            out.append(one + ten)
        elif k >= 5:
            out.append(five + one * (k - 5))
        else:
            out.append(one * k)
    return "".join(out)
