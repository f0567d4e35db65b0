"""Path words over the steps U, D, H, L.

A word is a sequence of steps U (up, +1), D (down, -1), H (horizontal, 0) and,
in the skew variant, L (a left-down step, -1).  A word is a *meander* when the
running level never drops below zero, and an *excursion* when it also ends at
level zero.  Skew words must additionally avoid the contiguous factors UL and
LU (the walk may not immediately retrace a step).

Two factor statistics drive everything downstream: the number of UD factors
(peaks) and the number of DU factors (valleys).  Paths with neither factor are
*cornerless*; cornerless excursions correspond to bargraphs by elevating the
path and reading off the column heights, which is implemented here as
``to_bargraph`` / ``from_bargraph``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple


class Step(enum.Enum):
    """A single step; the letter is the serialized form."""

    U = "U"
    D = "D"
    H = "H"
    L = "L"

    @property
    def delta(self) -> int:
        """Level change contributed by this step."""
        return _DELTA[self]


_DELTA = {Step.U: 1, Step.D: -1, Step.H: 0, Step.L: -1}


class Variant(enum.Enum):
    """Which step alphabet and adjacency rules apply."""

    PLAIN = "plain"
    SKEW = "skew"


class PathClass(enum.Enum):
    INVALID = "invalid"
    MEANDER = "meander"
    EXCURSION = "excursion"


class PatternStats(NamedTuple):
    """Counts of the two marked factors."""

    ud: int
    du: int


@dataclass(frozen=True)
class PathWord:
    """An immutable step sequence with cached level data.

    ``end_level`` and ``min_level`` are computed once at construction; they do
    not participate in equality or hashing.
    """

    steps: tuple[Step, ...]
    end_level: int = field(init=False, compare=False, repr=False)
    min_level: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        lvl = 0
        low = 0
        for s in self.steps:
            lvl += s.delta
            if lvl < low:
                low = lvl
        object.__setattr__(self, "end_level", lvl)
        object.__setattr__(self, "min_level", low)

    @classmethod
    def parse(cls, text: str) -> "PathWord":
        """Parse a word from letters, case-insensitively.

        >>> str(PathWord.parse("uhd"))
        'UHD'
        """
        try:
            return cls(tuple(Step(ch) for ch in text.upper()))
        except ValueError:
            raise ValueError(
                f"invalid step letter in {text!r}: expected only U, D, H, L"
            ) from None

    def count(self, step: Step) -> int:
        return self.steps.count(step)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)


def classify(word: PathWord, variant: Variant) -> PathClass:
    """Classify a word as invalid, a meander, or an excursion.

    Plain words may not contain L.  Skew words may not contain the contiguous
    factors UL or LU.  Either way the running level must stay nonnegative.
    """
    if word.min_level < 0:
        return PathClass.INVALID
    steps = word.steps
    if variant is Variant.PLAIN:
        if Step.L in steps:
            return PathClass.INVALID
    else:
        for a, b in zip(steps, steps[1:]):
            if (a is Step.U and b is Step.L) or (a is Step.L and b is Step.U):
                return PathClass.INVALID
    return PathClass.EXCURSION if word.end_level == 0 else PathClass.MEANDER


def pattern_stats(word: PathWord) -> PatternStats:
    """Count UD and DU factors in one pass."""
    ud = 0
    du = 0
    for a, b in zip(word.steps, word.steps[1:]):
        if a is Step.U and b is Step.D:
            ud += 1
        elif a is Step.D and b is Step.U:
            du += 1
    return PatternStats(ud, du)


def is_peakless(word: PathWord) -> bool:
    return pattern_stats(word).ud == 0


def is_valleyless(word: PathWord) -> bool:
    return pattern_stats(word).du == 0


def is_cornerless(word: PathWord) -> bool:
    stats = pattern_stats(word)
    return stats.ud == 0 and stats.du == 0


def elevate(word: PathWord) -> PathWord:
    """Return U + word + D, defined for plain excursions only."""
    if classify(word, Variant.PLAIN) is not PathClass.EXCURSION:
        raise ValueError(f"cannot elevate {str(word)!r}: not a plain excursion")
    return PathWord((Step.U,) + word.steps + (Step.D,))


@dataclass(frozen=True)
class Bargraph:
    """A column-height sequence; every height is at least 1.

    The semiperimeter of the enclosing lattice polygon is
    width + first height + sum of the positive height rises, and 0 for the
    empty bargraph.
    """

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(h < 1 for h in self.columns):
            raise ValueError(f"column heights must be >= 1, got {self.columns}")

    @property
    def semiperimeter(self) -> int:
        if not self.columns:
            return 0
        rises = sum(
            max(0, b - a) for a, b in zip(self.columns, self.columns[1:])
        )
        return len(self.columns) + self.columns[0] + rises

    @classmethod
    def parse(cls, text: str) -> "Bargraph":
        """Parse comma-separated heights, e.g. ``"2,1,3"``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad bargraph spec {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.columns)


def to_bargraph(word: PathWord) -> Bargraph:
    """Map a cornerless excursion to its bargraph.

    Elevate the word to U + word + D and record the height at each H step of
    the elevated walk; those heights are the columns.  The empty word maps to
    the empty bargraph.
    """
    if classify(word, Variant.PLAIN) is not PathClass.EXCURSION:
        raise ValueError(f"{str(word)!r} is not a plain excursion")
    if not is_cornerless(word):
        raise ValueError(f"{str(word)!r} has a UD or DU factor")
    height = 1
    cols = []
    for s in word.steps:
        if s is Step.H:
            cols.append(height)
        else:
            height += s.delta
    return Bargraph(tuple(cols))


def from_bargraph(bargraph: Bargraph) -> PathWord:
    """Map a nonempty bargraph back to its cornerless excursion.

    Walk the bargraph boundary (rise to each column height, one H across the
    top, fall at the end), then strip the elevation pair: the leading U and
    the trailing D.
    """
    if not bargraph.columns:
        raise ValueError("the empty bargraph has no path preimage")
    steps: list[Step] = []
    height = 0
    for h in bargraph.columns:
        if h > height:
            steps.extend([Step.U] * (h - height))
        else:
            steps.extend([Step.D] * (height - h))
        steps.append(Step.H)
        height = h
    steps.extend([Step.D] * height)
    # boundary words always start with U and end with D
    word = PathWord(tuple(steps[1:-1]))
    return word
