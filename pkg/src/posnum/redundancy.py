"""Enumerating every representation of a value and auditing value ranges."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import IntegerInterval, Numeral, NumberSystem
from .errors import ScaleGuardError
from .textio import format_numeral

__all__ = [
    "RepresentationSet",
    "RedundancyReport",
    "DEFAULT_BUDGET",
    "enumerate_representations",
    "count_representations",
    "audit",
    "check_uniqueness",
    "check_completeness",
    "redundancy_fraction",
    "positions_for",
]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class RepresentationSet:
    value: int
    members: tuple[Numeral, ...]
    max_positions: int

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, n):
        return n in self.members

    def strings(self, notation: str = "dotted") -> list[str]:
        return [format_numeral(m, notation) for m in self.members]


class _Layout:
    """Per-length tables used by the pruned search."""

    def __init__(self, sys: NumberSystem, length: int, no_adjacent_ones: bool):
        self.length = length
        self.no_adjacent_ones = no_adjacent_ones
        self.w = [sys.weight(i) for i in range(length)]
        self.lo = [sys.range_at(i).lo for i in range(length)]
        self.hi = [sys.range_at(i).hi for i in range(length)]
        # Bounds on what positions 0..i-1 can still contribute.
        self.rest_min = [0] * (length + 1)
        self.rest_max = [0] * (length + 1)
        for i in range(length):
            self.rest_min[i + 1] = self.rest_min[i] + self.lo[i] * self.w[i]
            self.rest_max[i + 1] = self.rest_max[i] + self.hi[i] * self.w[i]
        # Leading zeros are stripped, so a multi-digit form may not start with 0.
        if length > 1 and self.lo[-1] <= 0 <= self.hi[-1]:
            self.top_excludes_zero = True
        else:
            self.top_excludes_zero = False

    def search(self, v: int) -> Iterator[tuple[int, ...]]:
        """Digit tuples (most significant first) of this length worth ``v``."""
        L = self.length
        if not self.rest_min[L] <= v <= self.rest_max[L]:
            return
        digits = [0] * L
        w, lo, hi, rmin, rmax = self.w, self.lo, self.hi, self.rest_min, self.rest_max
        adj = self.no_adjacent_ones
        top_nz = self.top_excludes_zero

        def rec(i: int, r: int, prev: int):
            wi = w[i]
            # d * wi must leave r - d * wi inside [rmin[i], rmax[i]].
            d_lo = max(lo[i], -((rmax[i] - r) // wi))
            d_hi = min(hi[i], (r - rmin[i]) // wi)
            for d in range(d_lo, d_hi + 1):
                if i == L - 1 and top_nz and d == 0:
                    continue
                if adj and d == 1 and prev == 1:
                    continue
                digits[L - 1 - i] = d
                if i == 0:
                    if r == d:
                        yield tuple(digits)
                else:
                    yield from rec(i - 1, r - d * wi, d)

        yield from rec(L - 1, v, 0)


def _layouts(sys: NumberSystem, max_positions: int, no_adjacent_ones: bool) -> list[_Layout]:
    sys.check_length(max_positions)
    return [_Layout(sys, L, no_adjacent_ones) for L in range(1, max_positions + 1)]


def _enumerate(layouts, v, max_positions) -> RepresentationSet:
    members = [Numeral(t) for lay in layouts for t in lay.search(v)]
    # Shorter first, then lexicographic most significant first.
    members.sort(key=lambda n: (len(n), n.digits))
    return RepresentationSet(v, tuple(members), max_positions)


def enumerate_representations(
    v: int, sys: NumberSystem, max_positions: int, *, no_adjacent_ones: bool = False
) -> RepresentationSet:
    """All numerals of at most ``max_positions`` digits that evaluate to ``v``.

    Forms differing only by leading zeros count once.  ``no_adjacent_ones``
    forbids two neighbouring digits equal to 1 (the Zeckendorf condition).

    >>> from posnum.core import preset
    >>> [str(n) for n in enumerate_representations(360, preset("lc-020"), 3)]
    ['17.20', '18.0', '1.0.0']
    """
    return _enumerate(_layouts(sys, max_positions, no_adjacent_ones), v, max_positions)


def count_representations(
    v: int, sys: NumberSystem, max_positions: int, *, no_adjacent_ones: bool = False
) -> int:
    layouts = _layouts(sys, max_positions, no_adjacent_ones)
    return sum(1 for lay in layouts for _ in lay.search(v))


@dataclass(frozen=True)
class RedundancyReport:
    """Findings of a range audit.

    ``non_unique`` holds the representation sets of values with two or more
    forms; ``gaps`` lists the values with none.
    """

    range: IntegerInterval
    non_unique: tuple[RepresentationSet, ...]
    gaps: tuple[int, ...]
    max_positions: int

    @property
    def fraction_redundant(self) -> Fraction:
        return Fraction(len(self.non_unique), len(self.range))

    @property
    def non_unique_counts(self) -> list[tuple[int, int]]:
        return [(s.value, len(s)) for s in self.non_unique]

    @property
    def unique(self) -> bool:
        return not self.non_unique

    @property
    def complete(self) -> bool:
        return not self.gaps

    def lines(self, notation: str = "dotted") -> list[str]:
        """``value<TAB>count<TAB>form,form,...`` and ``value<TAB>GAP`` records."""
        records = [(s.value, f"{s.value}\t{len(s)}\t" + ",".join(s.strings(notation)))
                   for s in self.non_unique]
        records += [(g, f"{g}\tGAP") for g in self.gaps]
        records.sort(key=lambda r: r[0])
        return [text for _, text in records]


def _guard(sys: NumberSystem, rng: IntegerInterval, max_positions: int, budget: int):
    widest = max(sys.range_at(i).cardinality for i in range(max_positions))
    estimate = len(rng) * max_positions * widest
    if estimate > budget:
        raise ScaleGuardError(
            f"audit of {len(rng)} values x {max_positions} positions x {widest} digits "
            f"= {estimate} candidates exceeds the budget of {budget}; "
            "narrow the range or pass a larger budget"
        )


def audit(
    sys: NumberSystem,
    rng: IntegerInterval,
    max_positions: int,
    *,
    no_adjacent_ones: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> RedundancyReport:
    """Enumerate every value of ``rng`` and collect duplicates and gaps."""
    layouts = _layouts(sys, max_positions, no_adjacent_ones)
    _guard(sys, rng, max_positions, budget)
    non_unique, gaps = [], []
    for v in rng:
        found = [t for lay in layouts for t in lay.search(v)]
        if not found:
            gaps.append(v)
        elif len(found) > 1:
            members = sorted((Numeral(t) for t in found), key=lambda n: (len(n), n.digits))
            non_unique.append(RepresentationSet(v, tuple(members), max_positions))
    return RedundancyReport(rng, tuple(non_unique), tuple(gaps), max_positions)


def check_uniqueness(sys, rng, max_positions, **kw) -> RedundancyReport:
    return audit(sys, rng, max_positions, **kw)


def check_completeness(sys, rng, max_positions, **kw) -> RedundancyReport:
    return audit(sys, rng, max_positions, **kw)


def redundancy_fraction(sys, rng, max_positions, **kw) -> Fraction:
    return audit(sys, rng, max_positions, **kw).fraction_redundant


def positions_for(sys: NumberSystem, v: int) -> int:
    """Smallest position count whose weights reach past ``|v|``; a default for callers."""
    i = 1
    while sys.weight(i - 1) <= abs(v) and (sys.max_positions is None or i < sys.max_positions):
        i += 1
    return i if sys.max_positions is None else min(i, sys.max_positions)

