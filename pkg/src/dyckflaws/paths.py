"""Dyck paths over up/down steps, allowed to dip below the x-axis.

A path is a word over {U, D} with equally many U and D letters; it runs
from the origin to (2n, 0) where n is the semilength.  An up step is a
*flaw* when it starts at negative height.  Every adjacent pair of steps
forms one joint node: UD is a peak, DU a valley, UU a double ascent and
DD a double descent; nodes below the axis count like any other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class InvalidPathError(ValueError):
    """Base class for malformed path words."""


class OddLengthError(InvalidPathError):
    """The word has an odd number of letters."""


class InvalidCharacterError(InvalidPathError):
    """The word contains a letter other than U/u/D/d."""


class UnbalancedError(InvalidPathError):
    """The word has unequal numbers of up and down steps."""


class Step(Enum):
    UP = "U"
    DOWN = "D"

    @property
    def rise(self) -> int:
        return 1 if self is Step.UP else -1


@dataclass(frozen=True)
class Path:
    """An immutable balanced sequence of steps; the empty path is valid."""

    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        ups = sum(1 for s in self.steps if s is Step.UP)
        if 2 * ups != len(self.steps):
            raise UnbalancedError(
                f"{ups} up steps vs {len(self.steps) - ups} down steps"
            )

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return render_path(self)


@dataclass(frozen=True)
class StatVector:
    """The six statistics of one path."""

    semilength: int
    flaws: int
    peaks: int
    valleys: int
    double_ascents: int
    double_descents: int


def parse_path(word: str) -> Path:
    """Parse a word over U/D (case-insensitive) into a Path."""
    if len(word) % 2 != 0:
        raise OddLengthError(f"word length {len(word)} is odd")
    steps = []
    for ch in word:
        up = ch.upper()
        if up == "U":
            steps.append(Step.UP)
        elif up == "D":
            steps.append(Step.DOWN)
        else:
            raise InvalidCharacterError(f"invalid character {ch!r}")
    return Path(tuple(steps))


def render_path(p: Path) -> str:
    """Render a path as an uppercase U/D word; inverse of parse_path."""
    return "".join(s.value for s in p.steps)


def height_profile(p: Path) -> list[int]:
    """Heights visited by the path: 2n+1 values starting and ending at 0."""
    h = [0]
    for s in p.steps:
        h.append(h[-1] + s.rise)
    return h


def stats(p: Path) -> StatVector:
    """Compute semilength, flaws and the four joint-node statistics."""
    height = 0
    flaws = peaks = valleys = double_ascents = double_descents = 0
    prev = None
    for s in p.steps:
        if s is Step.UP:
            if height < 0:
                flaws += 1
            if prev is Step.UP:
                double_ascents += 1
            elif prev is Step.DOWN:
                valleys += 1
            height += 1
        else:
            if prev is Step.UP:
                peaks += 1
            elif prev is Step.DOWN:
                double_descents += 1
            height -= 1
        prev = s
    return StatVector(
        semilength=p.semilength,
        flaws=flaws,
        peaks=peaks,
        valleys=valleys,
        double_ascents=double_ascents,
        double_descents=double_descents,
    )


def is_catalan(p: Path) -> bool:
    """True when the path never dips below the x-axis."""
    height = 0
    for s in p.steps:
        height += s.rise
        if height < 0:
            return False
    return True
