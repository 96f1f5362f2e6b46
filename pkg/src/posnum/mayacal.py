"""Long Count, Tzolk'in, Haab and their link to Julian Day Numbers.

Day counts are days since Long Count 0.0.0.0.0.  The correlation with
the Julian Day Number scale is the GMT constant 584283, under which the
epoch falls on Monday 11 August 3114 BCE (proleptic Gregorian).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .arith import canonicalize
from .core import DigitRange, LongCount, Numeral, NumberSystem, as_numeral, evaluate, validate
from .errors import CalendarError, ParseError

__all__ = [
    "CORRELATION",
    "TZOLKIN_NAMES",
    "HAAB_MONTHS",
    "LONG_COUNT",
    "Weekday",
    "LongCountDate",
    "TzolkinDate",
    "HaabDate",
    "CivilDate",
    "TripleCheck",
    "lc_to_daycount",
    "daycount_to_lc",
    "daycount_to_jdn",
    "jdn_to_daycount",
    "jdn_from_civil",
    "civil_from_jdn",
    "weekday_of",
    "tzolkin_of",
    "haab_of",
    "haab_normalize",
    "calendar_round_of",
    "solve_calendar_round",
    "verify_triple",
    "lc_to_civil",
    "civil_to_lc",
    "CALENDAR_ROUND",
]

CORRELATION = 584283
CALENDAR_ROUND = 18980

TZOLKIN_NAMES = (
    "Imix", "Ik'", "Ak'bal", "K'an", "Chikchan", "Kimi", "Manik'", "Lamat",
    "Muluk", "Ok", "Chuwen", "Eb", "Ben", "Ix", "Men", "Kib", "Kab'an",
    "Etz'nab", "Kawak", "Ajaw",
)
HAAB_MONTHS = (
    "Pop", "Wo", "Sip", "Sotz'", "Sek", "Xul", "Yaxk'in", "Mol", "Ch'en",
    "Yax", "Sak", "Keh", "Mak", "K'ank'in", "Muwan", "Pax", "K'ayab", "Kumk'u",
    "Wayeb",
)

# 4 Ajaw 8 Kumk'u at day 0, back-solved from 13.0.5.17.17 = 3 Kab'an 10 Keh.
_TZOLKIN_EPOCH_NUMBER = 4
_TZOLKIN_EPOCH_NAME = 19
_HAAB_EPOCH_OFFSET = 17 * 20 + 8

# Canonical Long Count digits with as many positions as a date needs.
LONG_COUNT = NumberSystem(LongCount(None), DigitRange(0, 19), {1: DigitRange(0, 17)})


def _key(name: str) -> str:
    return re.sub(r"['’ʼ`]", "", name).lower()


_TZOLKIN_INDEX = {_key(n): i for i, n in enumerate(TZOLKIN_NAMES)}
_HAAB_INDEX = {_key(n): i for i, n in enumerate(HAAB_MONTHS)}


class Weekday(enum.IntEnum):
    MONDAY = 0
    TUESDAY = 1
    WEDNESDAY = 2
    THURSDAY = 3
    FRIDAY = 4
    SATURDAY = 5
    SUNDAY = 6

    def __str__(self):
        return self.name.capitalize()


@dataclass(frozen=True)
class LongCountDate:
    """baktun.katun.tun.winal.kin, optionally with higher periods in front."""

    digits: Numeral

    def __post_init__(self):
        digits = as_numeral(self.digits)
        if len(digits) < 5:
            raise CalendarError(f"Long Count date {digits} needs at least 5 positions")
        res = validate(digits, LONG_COUNT)
        if not res:
            raise CalendarError(
                f"{digits} is not a canonical Long Count: "
                + "; ".join(map(str, res.violations))
            )
        object.__setattr__(self, "digits", digits)

    @classmethod
    def parse(cls, text: str) -> "LongCountDate":
        return cls(as_numeral(text))

    def __str__(self):
        return str(self.digits)


@dataclass(frozen=True)
class TzolkinDate:
    number: int
    name_index: int

    def __post_init__(self):
        if not 1 <= self.number <= 13:
            raise CalendarError(f"Tzolk'in number {self.number} outside 1..13")
        if not 0 <= self.name_index <= 19:
            raise CalendarError(f"Tzolk'in name index {self.name_index} outside 0..19")

    @property
    def name(self) -> str:
        return TZOLKIN_NAMES[self.name_index]

    @classmethod
    def parse(cls, text: str) -> "TzolkinDate":
        m = re.fullmatch(r"\s*(\d+)\s+(\S.*?)\s*", text)
        if not m:
            raise ParseError("invalid Tzolk'in date", text, 0, "'<number> <day name>'")
        try:
            index = _TZOLKIN_INDEX[_key(m.group(2))]
        except KeyError:
            raise ParseError("unknown Tzolk'in day name", text, m.start(2),
                             "one of " + ", ".join(TZOLKIN_NAMES)) from None
        return cls(int(m.group(1)), index)

    def __str__(self):
        return f"{self.number} {self.name}"


@dataclass(frozen=True)
class HaabDate:
    """A Haab position.

    In the default (seating) form ``day`` runs 0..19 (0..4 in Wayeb).  With
    ``end_of_month_form`` the same day is written as day 20 of the previous
    month, so ``HaabDate(7, 20, True)`` (20 Mol) is ``HaabDate(8, 0)`` (0 Ch'en).
    """

    month_index: int
    day: int
    end_of_month_form: bool = False

    def __post_init__(self):
        m, d = self.month_index, self.day
        if self.end_of_month_form:
            if d != 20 or not 0 <= m <= 17:
                raise CalendarError("end-of-month form is day 20 of months Pop..Kumk'u")
        else:
            if not 0 <= m <= 18:
                raise CalendarError(f"Haab month index {m} outside 0..18")
            if not 0 <= d <= (4 if m == 18 else 19):
                raise CalendarError(f"Haab day {d} invalid in {HAAB_MONTHS[m]}")

    @property
    def month(self) -> str:
        return HAAB_MONTHS[self.month_index]

    @property
    def day_of_year(self) -> int:
        return self.month_index * 20 + self.day

    @classmethod
    def from_day_of_year(cls, n: int) -> "HaabDate":
        month, day = divmod(n % 365, 20)
        return cls(month, day)

    @classmethod
    def parse(cls, text: str) -> "HaabDate":
        m = re.fullmatch(r"\s*(\d+)\s+(\S.*?)\s*", text)
        if not m:
            raise ParseError("invalid Haab date", text, 0, "'<day> <month name>'")
        try:
            month = _HAAB_INDEX[_key(m.group(2))]
        except KeyError:
            raise ParseError("unknown Haab month", text, m.start(2),
                             "one of " + ", ".join(HAAB_MONTHS)) from None
        day = int(m.group(1))
        return cls(month, day, end_of_month_form=(day == 20))

    def __str__(self):
        return f"{self.day} {self.month}"


@dataclass(frozen=True, order=True)
class CivilDate:
    """Proleptic Gregorian date with astronomical years (0 = 1 BCE)."""

    year: int
    month: int
    day: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise CalendarError(f"month {self.month} outside 1..12")
        if not 1 <= self.day <= _month_length(self.year, self.month):
            raise CalendarError(f"day {self.day} invalid for {self.year:04d}-{self.month:02d}")

    @classmethod
    def parse(cls, text: str) -> "CivilDate":
        m = re.fullmatch(r"(-?\d+)-(\d{1,2})-(\d{1,2})", text.strip())
        if not m:
            raise ParseError("invalid civil date", text, 0, "YYYY-MM-DD")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    def __str__(self):
        sign = "-" if self.year < 0 else ""
        return f"{sign}{abs(self.year):04d}-{self.month:02d}-{self.day:02d}"

    def display(self) -> str:
        """Historical rendering: years up to 0 become ``(1 - year) BCE``."""
        if self.year <= 0:
            return f"{1 - self.year:04d}-{self.month:02d}-{self.day:02d} BCE"
        return str(self)


def _is_leap(y: int) -> bool:
    return y % 4 == 0 and (y % 100 != 0 or y % 400 == 0)


def _month_length(y: int, m: int) -> int:
    if m == 2:
        return 29 if _is_leap(y) else 28
    return 30 if m in (4, 6, 9, 11) else 31


def jdn_from_civil(year: int, month: int | None = None, day: int | None = None) -> int:
    """Julian Day Number of a proleptic Gregorian date."""
    if isinstance(year, CivilDate):
        year, month, day = year.year, year.month, year.day
    else:
        CivilDate(year, month, day)
    # Count in 400-year eras starting on 1 March so leap days fall last.
    y = year - (month <= 2)
    era = y // 400
    yoe = y - era * 400
    mp = (month + 9) % 12
    doy = (153 * mp + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe + 1721120


def civil_from_jdn(jdn: int) -> CivilDate:
    z = jdn - 1721120
    era = z // 146097
    doe = z - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    day = doy - (153 * mp + 2) // 5 + 1
    month = mp + 3 if mp < 10 else mp - 9
    year = yoe + era * 400 + (month <= 2)
    return CivilDate(year, month, day)


def lc_to_daycount(lc) -> int:
    if not isinstance(lc, LongCountDate):
        lc = LongCountDate(as_numeral(lc))
    return evaluate(lc.digits, LONG_COUNT)


def daycount_to_lc(days: int) -> LongCountDate:
    if days < 0:
        raise CalendarError(f"day count {days} precedes the Long Count epoch")
    digits = canonicalize(days, LONG_COUNT).digits
    return LongCountDate(Numeral((0,) * (5 - len(digits)) + digits))


def daycount_to_jdn(days: int) -> int:
    return days + CORRELATION


def jdn_to_daycount(jdn: int) -> int:
    return jdn - CORRELATION


def weekday_of(jdn: int) -> Weekday:
    return Weekday(jdn % 7)


def tzolkin_of(days: int) -> TzolkinDate:
    return TzolkinDate(
        (_TZOLKIN_EPOCH_NUMBER - 1 + days) % 13 + 1,
        (_TZOLKIN_EPOCH_NAME + days) % 20,
    )


def haab_of(days: int) -> HaabDate:
    return HaabDate.from_day_of_year(_HAAB_EPOCH_OFFSET + days)


def haab_normalize(h: HaabDate, to_end_of_month_form: bool) -> HaabDate:
    """Switch between ``0 <month>`` and ``20 <previous month>``."""
    if to_end_of_month_form:
        if h.end_of_month_form:
            return h
        if h.day != 0 or h.month_index == 0:
            raise CalendarError(f"{h} has no end-of-month form")
        return HaabDate(h.month_index - 1, 20, True)
    if not h.end_of_month_form:
        return h
    return HaabDate(h.month_index + 1, 0)


def calendar_round_of(days: int) -> tuple[TzolkinDate, HaabDate]:
    return tzolkin_of(days), haab_of(days)


def _tzolkin_residue(t: TzolkinDate) -> int:
    """Day count modulo 260 at which ``t`` occurs."""
    n = (t.number - _TZOLKIN_EPOCH_NUMBER) % 13
    k = (t.name_index - _TZOLKIN_EPOCH_NAME) % 20
    for r in range(k, 260, 20):
        if r % 13 == n:
            return r
    raise AssertionError("13 and 20 are coprime")


def solve_calendar_round(t: TzolkinDate, h: HaabDate, start: int, stop: int) -> list[int]:
    """Every day count in ``[start, stop]`` whose Calendar Round is ``t``, ``h``."""
    target = (h.day_of_year - _HAAB_EPOCH_OFFSET) % 365
    r = _tzolkin_residue(t)
    base = None
    for k in range(CALENDAR_ROUND // 260):
        cand = r + 260 * k
        if cand % 365 == target:
            base = cand
            break
    if base is None:
        return []
    first = start + (base - start) % CALENDAR_ROUND
    return list(range(first, stop + 1, CALENDAR_ROUND))


@dataclass(frozen=True)
class TripleCheck:
    consistent: bool
    mismatches: tuple[str, ...]
    expected_tzolkin: TzolkinDate
    expected_haab: HaabDate

    def __bool__(self):
        return self.consistent

    def __str__(self):
        if self.consistent:
            return "consistent"
        return (f"inconsistent: {', '.join(self.mismatches)} "
                f"(expected {self.expected_tzolkin} {self.expected_haab})")


def verify_triple(lc, t: TzolkinDate, h: HaabDate) -> TripleCheck:
    """Cross-check a Long Count against its Tzolk'in and Haab dates."""
    days = lc_to_daycount(lc)
    et, eh = calendar_round_of(days)
    bad = []
    if t.number != et.number:
        bad.append("tzolkin_number")
    if t.name_index != et.name_index:
        bad.append("tzolkin_name")
    if h.day_of_year != eh.day_of_year:
        seat = haab_normalize(h, False)
        if seat.day != eh.day:
            bad.append("haab_day")
        if seat.month_index != eh.month_index:
            bad.append("haab_month")
    return TripleCheck(not bad, tuple(bad), et, eh)


def lc_to_civil(lc) -> CivilDate:
    return civil_from_jdn(daycount_to_jdn(lc_to_daycount(lc)))


def civil_to_lc(date: CivilDate) -> LongCountDate:
    return daycount_to_lc(jdn_to_daycount(jdn_from_civil(date)))
