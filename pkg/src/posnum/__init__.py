"""Exact arithmetic for positional number systems and the Maya calendars."""

from .arith import add, canonicalize, compare, regular_view
from .core import (
    DigitRange,
    IntegerInterval,
    Numeral,
    NumberSystem,
    evaluate,
    format_system_spec,
    parse_system_spec,
    preset,
    representable_interval,
    shift_digits,
    validate,
)
from .redundancy import (
    check_completeness,
    check_uniqueness,
    count_representations,
    enumerate_representations,
    redundancy_fraction,
)
from .special import to_balanced, to_bijective, from_bijective, zeckendorf, zeckendorf_normalize
from .textio import format_numeral, parse_numeral, roman_format, roman_parse

__version__ = "0.1.0"

__all__ = [
    "DigitRange",
    "IntegerInterval",
    "Numeral",
    "NumberSystem",
    "evaluate",
    "format_system_spec",
    "parse_system_spec",
    "preset",
    "representable_interval",
    "shift_digits",
    "validate",
    "check_completeness",
    "check_uniqueness",
    "count_representations",
    "enumerate_representations",
    "redundancy_fraction",
    "add",
    "canonicalize",
    "compare",
    "regular_view",
    "to_balanced",
    "to_bijective",
    "from_bijective",
    "zeckendorf",
    "zeckendorf_normalize",
    "format_numeral",
    "parse_numeral",
    "roman_format",
    "roman_parse",
]
