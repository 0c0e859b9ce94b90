"""Structure-preserving maps between flaw classes.

Three maps live here:

* ``complement`` flips every step, exchanging peaks with valleys and
  ascents with descents while sending m flaws to n - m.
* ``reverse_complement`` reads the word backwards and flips it,
  exchanging double ascents with double descents and fixing everything
  else.
* ``cf_step`` adds one flaw while preserving the double-ascent count.
  It cuts a path into S R U Q D T, where UQD is the right-most factor
  that starts and ends on the x-axis and stays strictly above it in
  between, R is the maximal weakly-below-axis run in front of it, and S
  is the remaining prefix (empty or ending with a down step onto the
  axis); the image is S T D R U Q.  ``cf_step_inverse`` undoes it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import Path, Step, height_profile, is_catalan, stats


class BijectionDomainError(ValueError):
    """Input outside the domain of the requested map."""


class NoPositiveExcursionError(BijectionDomainError):
    """The path never rises above the axis (every up step is a flaw)."""


class NoFlawError(BijectionDomainError):
    """The path has no flaw to remove."""


def complement(p: Path) -> Path:
    """Flip every step; an involution."""
    flip = {Step.UP: Step.DOWN, Step.DOWN: Step.UP}
    return Path(tuple(flip[s] for s in p.steps))


def reverse_complement(p: Path) -> Path:
    """Flip every step and reverse the word; an involution."""
    flip = {Step.UP: Step.DOWN, Step.DOWN: Step.UP}
    return Path(tuple(flip[s] for s in reversed(p.steps)))


@dataclass(frozen=True)
class CfDecomposition:
    """The S R U Q D T cut of a path used by the flaw-adding step.

    ``up_index`` and ``down_index`` locate the distinguished U and D
    steps in the source word (0-based).
    """

    s: Path
    r: Path
    q: Path
    t: Path
    up_index: int
    down_index: int

    def __post_init__(self) -> None:
        if not is_catalan(self.q):
            raise ValueError("Q segment must be a Catalan path")
        if not is_catalan(complement(self.r)):
            raise ValueError("R segment must lie weakly below the axis")
        if self.s.steps and self.s.steps[-1] is not Step.DOWN:
            raise ValueError("S must end with a down step onto the axis")

    def reassembled(self) -> Path:
        return Path(
            self.s.steps
            + self.r.steps
            + (Step.UP,)
            + self.q.steps
            + (Step.DOWN,)
            + self.t.steps
        )

    def display(self) -> str:
        """Segments joined by '|' in S R U Q D T order, '·' when empty."""
        def word(seg: Path) -> str:
            return str(seg) or "·"

        return "|".join(
            [word(self.s), word(self.r), "U", word(self.q), "D", word(self.t)]
        )


def _previous_zero(heights: list[int], pos: int) -> int:
    z = pos - 1
    while heights[z] != 0:
        z -= 1
    return z


def _below_run_start(steps: tuple[Step, ...], heights: list[int], pos: int) -> int:
    """Walk left from axis position ``pos`` over whole below-axis excursions."""
    start = pos
    while start > 0:
        z = _previous_zero(heights, start)
        if steps[z] is Step.UP:  # excursion rises above the axis
            break
        start = z
    return start


def cf_decompose_forward(p: Path) -> CfDecomposition:
    """Cut p into S R U Q D T around its right-most above-axis excursion."""
    heights = height_profile(p)
    top = max(range(len(heights)), key=lambda i: (heights[i] > 0, i))
    if heights[top] <= 0:
        raise NoPositiveExcursionError(
            "path never rises above the axis; every up step is already a flaw"
        )
    start = _previous_zero(heights, top + 1)
    end = top
    while heights[end] != 0:
        end += 1
    steps = p.steps
    t = Path(steps[end:])
    if not is_catalan(complement(t)):
        raise AssertionError("segment after the last excursion must stay below")
    r_start = _below_run_start(steps, heights, start)
    return CfDecomposition(
        s=Path(steps[:r_start]),
        r=Path(steps[r_start:start]),
        q=Path(steps[start + 1 : end - 1]),
        t=t,
        up_index=start,
        down_index=end - 1,
    )


def cf_step(p: Path) -> Path:
    """Add one flaw, preserving semilength and the double-ascent count."""
    d = cf_decompose_forward(p)
    return Path(
        d.s.steps
        + d.t.steps
        + (Step.DOWN,)
        + d.r.steps
        + (Step.UP,)
        + d.q.steps
    )


def cf_step_inverse(p: Path) -> Path:
    """Remove one flaw; two-sided inverse of cf_step."""
    heights = height_profile(p)
    steps = p.steps
    up = None
    for i in range(len(steps) - 1, -1, -1):
        if steps[i] is Step.UP and heights[i] == -1:
            up = i
            break
    if up is None:
        raise NoFlawError("path has no up step below the axis")
    down = _previous_zero(heights, up + 1)
    if steps[down] is not Step.DOWN:
        raise AssertionError("below-axis run must open with a down step")
    t_start = _below_run_start(steps, heights, down)
    return Path(
        steps[:t_start]
        + steps[down + 1 : up]
        + (Step.UP,)
        + steps[up + 1 :]
        + (Step.DOWN,)
        + steps[t_start:down]
    )


def cf_inverse_decomposition(p: Path) -> CfDecomposition:
    """The S R U Q D T cut of cf_step_inverse(p); cf_step maps it back to p."""
    q = cf_step_inverse(p)
    return cf_decompose_forward(q)
