import datetime
import random

import pytest

from oracles import LONG_COUNT_WEIGHTS, jdn_via_datetime
from posnum.errors import CalendarError, ParseError
from posnum.mayacal import (
    CALENDAR_ROUND,
    CORRELATION,
    HAAB_MONTHS,
    TZOLKIN_NAMES,
    CivilDate,
    HaabDate,
    LongCountDate,
    TzolkinDate,
    Weekday,
    calendar_round_of,
    civil_from_jdn,
    civil_to_lc,
    daycount_to_jdn,
    daycount_to_lc,
    haab_normalize,
    haab_of,
    jdn_from_civil,
    jdn_to_daycount,
    lc_to_civil,
    lc_to_daycount,
    solve_calendar_round,
    tzolkin_of,
    verify_triple,
    weekday_of,
)

KABAN = TZOLKIN_NAMES.index("Kab'an")
KEH = HAAB_MONTHS.index("Keh")


def lc_sum(text):
    digits = [int(x) for x in text.split(".")][::-1]
    return sum(d * w for d, w in zip(digits, LONG_COUNT_WEIGHTS))


@pytest.mark.parametrize("text", ["13.0.0.0.0", "13.0.5.17.17", "0.0.0.0.0", "9.13.0.0.0",
                                  "7.16.3.2.13", "1.0.0.0.0.0"])
def test_lc_to_daycount_matches_positional_sum(text):
    assert lc_to_daycount(text) == lc_sum(text)


def test_daycount_examples():
    assert lc_to_daycount("13.0.0.0.0") == 1872000
    assert lc_to_daycount("13.0.5.17.17") == 1874157
    assert str(daycount_to_lc(1872000)) == "13.0.0.0.0"
    assert str(daycount_to_lc(390)) == "0.0.1.1.10"
    assert str(daycount_to_lc(0)) == "0.0.0.0.0"
    assert str(daycount_to_lc(20 * 144000)) == "1.0.0.0.0.0"


def test_long_count_validation():
    with pytest.raises(CalendarError):
        LongCountDate.parse("13.0.5.18.17")
    with pytest.raises(CalendarError):
        LongCountDate.parse("1.1.10")
    with pytest.raises(CalendarError):
        daycount_to_lc(-1)


def test_daycount_lc_round_trip():
    rng = random.Random(1)
    for d in list(range(0, 20000)) + rng.sample(range(2 * 10**6 + 1), 20000):
        lc = daycount_to_lc(d)
        assert lc_to_daycount(lc) == d


def test_epoch_anchor():
    assert daycount_to_jdn(0) == CORRELATION == 584283
    assert civil_from_jdn(584283) == CivilDate(-3113, 8, 11)
    assert weekday_of(584283) is Weekday.MONDAY
    assert daycount_to_jdn(1) == 584284
    assert jdn_to_daycount(584283) == 0


def test_2018_anchor():
    d = lc_to_daycount("13.0.5.17.17")
    j = daycount_to_jdn(d)
    assert j == 2458440 == jdn_from_civil(2018, 11, 17)
    assert weekday_of(j) is Weekday.SATURDAY
    assert tzolkin_of(d) == TzolkinDate(3, KABAN)
    assert haab_of(d) == HaabDate(KEH, 10)


def test_epoch_cycle_positions_back_solved():
    # Walk the 2018 anchor back to day 0 with plain modular arithmetic.
    d = 1874157
    number = (3 - 1 - d) % 13 + 1
    name = (KABAN - d) % 20
    doy = (KEH * 20 + 10 - d) % 365
    assert (number, TZOLKIN_NAMES[name]) == (4, "Ajaw")
    assert divmod(doy, 20) == (17, 8)
    assert tzolkin_of(0) == TzolkinDate(4, 19)
    assert str(haab_of(0)) == "8 Kumk'u"


def test_dates_quoted_in_text():
    assert lc_to_civil("13.0.0.0.0") == CivilDate(2012, 12, 21)
    assert lc_to_civil("7.16.3.2.13").year == -35
    assert lc_to_civil("7.16.3.2.13").display().endswith("BCE")
    assert civil_to_lc(CivilDate(2018, 11, 17)) == LongCountDate.parse("13.0.5.17.17")


def test_jdn_matches_datetime():
    last = datetime.date.max.toordinal()
    for ordinal in list(range(1, last + 1, 37)) + [last]:
        day = datetime.date.fromordinal(ordinal)
        j = jdn_via_datetime(day.year, day.month, day.day)
        assert jdn_from_civil(day.year, day.month, day.day) == j
        assert civil_from_jdn(j) == CivilDate(day.year, day.month, day.day)


def test_civil_round_trip_wide():
    for y in range(-4000, 4001):
        for m, d in ((1, 1), (2, 28), (3, 1), (12, 31)):
            j = jdn_from_civil(y, m, d)
            assert civil_from_jdn(j) == CivilDate(y, m, d)
    start = jdn_from_civil(-4000, 1, 1)
    stop = jdn_from_civil(4000, 12, 31)
    prev = civil_from_jdn(start - 1)
    for j in range(start, stop + 1, 3):
        c = civil_from_jdn(j)
        assert c > prev and jdn_from_civil(c) == j
        prev = c


def test_civil_validation():
    with pytest.raises(CalendarError):
        CivilDate(2019, 2, 29)
    CivilDate(2000, 2, 29)
    CivilDate(0, 2, 29)
    with pytest.raises(CalendarError):
        CivilDate(1900, 2, 29)
    assert CivilDate.parse("-3113-08-11") == CivilDate(-3113, 8, 11)
    assert CivilDate(-3113, 8, 11).display() == "3114-08-11 BCE"
    with pytest.raises(ParseError):
        CivilDate.parse("2018/11/17")


def test_weekday_steps():
    j = jdn_from_civil(2012, 12, 20)
    assert jdn_from_civil(2012, 12, 21) - j == 1
    for k in range(30):
        assert weekday_of(j + k + 1) == (weekday_of(j + k) + 1) % 7
        assert weekday_of(j + k) == weekday_of(j + k + 7)
    assert str(Weekday.SATURDAY) == "Saturday"


def test_cycle_periods():
    base = 1874157
    tz = [tzolkin_of(base + k) for k in range(2 * CALENDAR_ROUND)]
    hb = [haab_of(base + k) for k in range(2 * CALENDAR_ROUND)]
    cr = list(zip(tz, hb))
    first_tz = min(k for k in range(1, len(tz)) if tz[k] == tz[0])
    first_hb = min(k for k in range(1, len(hb)) if hb[k] == hb[0])
    first_cr = min(k for k in range(1, len(cr)) if cr[k] == cr[0])
    assert (first_tz, first_hb, first_cr) == (260, 365, 18980)
    assert len(set(cr[:CALENDAR_ROUND])) == CALENDAR_ROUND
    assert cr[:CALENDAR_ROUND] == cr[CALENDAR_ROUND:]


def test_haab_normalize():
    chen = HAAB_MONTHS.index("Ch'en")
    mol = HAAB_MONTHS.index("Mol")
    end = haab_normalize(HaabDate(chen, 0), True)
    assert end == HaabDate(mol, 20, True) and str(end) == "20 Mol"
    assert haab_normalize(end, False) == HaabDate(chen, 0)
    assert end.day_of_year == HaabDate(chen, 0).day_of_year
    with pytest.raises(CalendarError):
        haab_normalize(HaabDate(0, 5), True)
    with pytest.raises(CalendarError):
        haab_normalize(HaabDate(0, 0), True)
    wayeb = haab_normalize(HaabDate(18, 0), True)
    assert str(wayeb) == "20 Kumk'u"


def test_haab_validation_and_parse():
    with pytest.raises(CalendarError):
        HaabDate(18, 5)
    with pytest.raises(CalendarError):
        HaabDate(3, 20)
    assert HaabDate.parse("20 Mol").end_of_month_form
    assert HaabDate.parse("10 keh") == HaabDate(KEH, 10)
    assert TzolkinDate.parse("3 Kaban") == TzolkinDate(3, KABAN)
    with pytest.raises(ParseError):
        TzolkinDate.parse("3 Kabon")
    with pytest.raises(CalendarError):
        TzolkinDate(14, 0)


def test_solve_calendar_round():
    t, h = TzolkinDate(3, KABAN), HaabDate(KEH, 10)
    assert solve_calendar_round(t, h, 1874000, 1875000) == [1874157]
    sols = solve_calendar_round(t, h, 0, 2 * 10**6)
    assert 1874157 in sols
    assert all(b - a == CALENDAR_ROUND for a, b in zip(sols, sols[1:]))
    assert all(calendar_round_of(d) == (t, h) for d in sols)
    assert solve_calendar_round(t, h, 1874158, 1874158 + 18978) == []
    # Both cycles are multiples of 5 days, so their residues must agree mod 5.
    assert solve_calendar_round(TzolkinDate(4, 19), HaabDate(17, 9), 0, 10**5) == []


def test_verify_triple_examples():
    t, h = TzolkinDate(3, KABAN), HaabDate(KEH, 10)
    assert verify_triple("13.0.5.17.17", t, h).consistent
    bad = verify_triple("13.0.5.17.17", TzolkinDate(4, KABAN), h)
    assert not bad and bad.mismatches == ("tzolkin_number",)
    both = verify_triple("13.0.5.17.16", t, h)
    assert not both
    assert {"tzolkin_number", "tzolkin_name", "haab_day"} <= set(both.mismatches)


def test_verify_triple_accepts_end_of_month_form():
    d = lc_to_daycount("13.0.5.17.17")
    for k in range(400):
        t, h = calendar_round_of(d + k)
        if h.day == 0 and h.month_index > 0:
            lc = daycount_to_lc(d + k)
            assert verify_triple(lc, t, haab_normalize(h, True)).consistent
            return
    raise AssertionError("no seating day found")


def _perturb(rng, t, h):
    field = rng.randrange(4)
    if field == 0:
        return TzolkinDate(t.number % 13 + 1, t.name_index), h
    if field == 1:
        return TzolkinDate(t.number, (t.name_index + rng.randint(1, 19)) % 20), h
    if field == 2:
        limit = 5 if h.month_index == 18 else 20
        return t, HaabDate(h.month_index, (h.day + rng.randint(1, limit - 1)) % limit)
    month = (h.month_index + rng.randint(1, 17)) % 18
    return t, HaabDate(month, min(h.day, 19))


def test_verify_triple_random():
    rng = random.Random(2024)
    for _ in range(2000):
        d = rng.randrange(0, 2 * 10**6)
        lc = daycount_to_lc(d)
        t, h = calendar_round_of(d)
        assert verify_triple(lc, t, h).consistent
        pt, ph = _perturb(rng, t, h)
        assert not verify_triple(lc, pt, ph).consistent
