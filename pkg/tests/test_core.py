import itertools

import pytest
from hypothesis import given, strategies as st

from posnum.core import (
    PRESET_SPECS,
    DigitRange,
    IntegerInterval,
    LongCount,
    Numeral,
    NumberSystem,
    Power,
    evaluate,
    format_system_spec,
    parse_system_spec,
    preset,
    representable_interval,
    shift_digits,
    validate,
)
from posnum.errors import LengthError, SystemSpecError, UnsupportedSystemError


@pytest.mark.parametrize(
    "text, system, expected",
    [
        ("19.10", "lc-019", 390),
        ("10.11.3.19.14", "lc-019", 1520674),
        ("10.11.3.18.14", "lc-019", 1520654),
        ("0", "decimal", 0),
        ("1.1.10", "lc-std", 390),
    ],
)
def test_evaluate_examples(text, system, expected):
    assert evaluate(text, preset(system)) == expected


def test_evaluate_alice_base_39():
    # 4 x 12 written as "19" in base 39
    assert evaluate("1.9", parse_system_spec("power(39)[0..38]")) == 48


def test_evaluate_ignores_digit_ranges():
    assert evaluate("3.19.3", preset("lc-std")) == 3 * 360 + 19 * 20 + 3


def test_evaluate_length_bound():
    with pytest.raises(LengthError):
        evaluate("1.0.0.0", parse_system_spec("weights(1,3,9)[-1..1]"))
    with pytest.raises(LengthError):
        evaluate("1.0.0.0.0.0", preset("lc-std"))


def test_validate():
    res = validate("3.19.3", preset("lc-std"))
    assert not res.ok
    assert [v.position for v in res.violations] == [1]
    assert validate("3.19.3", preset("lc-019")).ok
    assert validate("9", preset("decimal")).ok
    res = validate("1.0.0.0.0.0", preset("lc-019"))
    assert not res.ok and not res.length_ok and not res.violations


@pytest.mark.parametrize(
    "system, length, expected",
    [
        ("balanced3", 4, (-40, 40)),
        ("power(3)[0..2]", 4, (0, 80)),
        ("decimal", 1, (0, 9)),
        ("lc-019", 3, (0, 19 * 360 + 19 * 20 + 19)),
    ],
)
def test_representable_interval(system, length, expected):
    sys_ = preset(system) if system in PRESET_SPECS else parse_system_spec(system)
    iv = representable_interval(sys_, length)
    assert (iv.min, iv.max) == expected


SMALL_SYSTEMS = [
    "power(2)[0..1]",
    "power(3)[-1..1]",
    "power(3)[0..1]",
    "power(4)[1..4]",
    "weights(1,3,9,27)[-1..1]",
    "longcount(4)[0..2]",
    "fib(6)[0..1]",
    "factorial(4)[0..1]{1:0..2;2:0..3;3:0..4}",
]


@pytest.mark.parametrize("spec", SMALL_SYSTEMS)
def test_interval_matches_brute_force(spec):
    sys_ = parse_system_spec(spec)
    for length in range(1, 5):
        pools = [range(sys_.range_at(i).lo, sys_.range_at(i).hi + 1) for i in range(length)]
        values = [
            sum(d * sys_.weight(i) for i, d in enumerate(t)) for t in itertools.product(*pools)
        ]
        iv = representable_interval(sys_, length)
        assert (iv.min, iv.max) == (min(values), max(values))


@pytest.mark.parametrize("spec", SMALL_SYSTEMS)
def test_intervals_nest_when_zero_allowed(spec):
    sys_ = parse_system_spec(spec)
    for length in range(1, 4):
        if 0 in sys_.range_at(length):
            assert representable_interval(sys_, length + 1).issuperset(
                representable_interval(sys_, length)
            )


@pytest.mark.parametrize("name", sorted(PRESET_SPECS))
def test_presets_round_trip_through_spec(name):
    sys_ = preset(name)
    assert parse_system_spec(format_system_spec(sys_)) == sys_


def test_preset_contents():
    assert preset("bijective10") == NumberSystem(Power(10), DigitRange(1, 10))
    lc020 = preset("lc-020")
    assert all(lc020.range_at(i) == DigitRange(0, 20) for i in range(5))
    fw = preset("fibweights")
    assert [fw.weight(i) for i in range(4)] == [1, 3, 9, 27]
    assert fw.default_range == DigitRange(-1, 1)
    z = preset("zeckendorf")
    assert [z.weight(i) for i in range(7)] == [1, 2, 3, 5, 8, 13, 21]
    f = preset("factorial")
    assert [(f.weight(i), f.range_at(i).hi) for i in range(4)] == [(1, 1), (2, 2), (6, 3), (24, 4)]
    lsd = preset("lsd")
    assert [lsd.range_at(i).hi for i in range(3)] == [11, 19, 99]


def test_unknown_preset():
    with pytest.raises(KeyError):
        preset("base64")


def test_parse_long_count_spec():
    sys_ = parse_system_spec("longcount(5)[0..19]{1:0..17}")
    assert sys_ == preset("lc-std")
    assert sys_.weights == LongCount(5)
    assert [sys_.weight(i) for i in range(5)] == [1, 20, 360, 7200, 144000]


def test_parse_lsd_spec():
    sys_ = parse_system_spec("weights(1,12,240)[0..9]{0:0..11;1:0..19;2:0..99}")
    assert evaluate("1.2.3", sys_) == 240 + 24 + 3


@pytest.mark.parametrize(
    "text, offset",
    [
        ("power(10)[0..9", 14),
        ("pow(10)[0..9]", 0),
        ("power(10)[0.9]", 11),
        ("power(10)[0..9]{1:0..3", 22),
        ("power(10)[0..9] x", 16),
    ],
)
def test_spec_syntax_errors_report_offset(text, offset):
    with pytest.raises(SystemSpecError) as info:
        parse_system_spec(text)
    assert info.value.offset == offset
    assert info.value.expected


@pytest.mark.parametrize(
    "text",
    [
        "power(10)[9..0]",
        "weights(1,5,3)[0..1]",
        "weights(2,5)[0..1]",
        "power(1)[0..0]",
        "longcount(3)[0..19]{3:0..1}",
        "power(10)[0..9]{1:0..1;1:0..2}",
    ],
)
def test_spec_semantic_errors(text):
    with pytest.raises(SystemSpecError):
        parse_system_spec(text)


def test_shift_digits_examples():
    shifted, offset = shift_digits(parse_system_spec("power(3)[0..2]"), -1, 4)
    assert offset == -40
    assert shifted == preset("balanced3")
    dec = preset("decimal")
    same, zero = shift_digits(dec, 0, 3)
    assert (same, zero) == (dec, 0)
    _, offset = shift_digits(dec, 1, 2)
    assert offset == 11


def test_shift_digits_rejects_overrides():
    with pytest.raises(UnsupportedSystemError):
        shift_digits(preset("lc-std"), 1, 3)


@pytest.mark.parametrize("b, k, s", [(3, 4, -1), (10, 2, 1), (5, 3, 2), (2, 5, -3), (7, 2, 4)])
def test_shift_offset_matches_brute_force_interval(b, k, s):
    base_sys = parse_system_spec(f"power({b})[0..{b - 1}]")
    shifted, offset = shift_digits(base_sys, s, k)
    values = [
        sum(d * b**i for i, d in enumerate(t))
        for t in itertools.product(range(s, b + s), repeat=k)
    ]
    assert offset == s * (b**k - 1) // (b - 1)
    assert min(values) == offset and max(values) == b**k - 1 + offset
    assert sorted(values) == list(range(offset, offset + b**k))
    iv = representable_interval(shifted, k)
    assert (iv.min, iv.max) == (min(values), max(values))


@given(
    base=st.integers(2, 12),
    s=st.integers(-6, 6),
    digits=st.lists(st.integers(0, 11), min_size=1, max_size=6),
)
def test_shift_law_digitwise(base, s, digits):
    digits = [d % base for d in digits]
    sys_ = NumberSystem(Power(base), DigitRange(0, base - 1))
    shifted, offset = shift_digits(sys_, s, len(digits))
    moved = Numeral(tuple(d + s for d in digits))
    assert validate(moved, shifted).ok
    assert evaluate(moved, shifted) == evaluate(Numeral(tuple(digits)), sys_) + offset


@given(
    name=st.sampled_from(sorted(PRESET_SPECS)),
    data=st.data(),
)
def test_evaluate_is_linear_in_each_digit(name, data):
    sys_ = preset(name)
    length = data.draw(st.integers(1, min(sys_.max_positions or 6, 6)))
    digits = data.draw(st.lists(st.integers(-30, 30), min_size=length, max_size=length))
    pos = data.draw(st.integers(0, length - 1))
    n = Numeral(tuple(digits))
    bumped = list(digits)
    bumped[length - 1 - pos] += 1
    assert evaluate(Numeral(tuple(bumped)), sys_) - evaluate(n, sys_) == sys_.weight(pos)


def test_interval_type():
    iv = IntegerInterval(-2, 2)
    assert len(iv) == 5 and list(iv) == [-2, -1, 0, 1, 2] and 0 in iv
    with pytest.raises(ValueError):
        IntegerInterval(1, 0)


def test_numeral_basics():
    n = Numeral((0, 0, 3, 1))
    assert n.digit_at(0) == 1 and n.positional() == (1, 3, 0, 0)
    assert n.strip_leading_zeros() == Numeral((3, 1))
    assert Numeral((0,)).strip_leading_zeros() == Numeral((0,))
    with pytest.raises(ValueError):
        Numeral(())
