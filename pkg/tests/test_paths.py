import pytest
from hypothesis import given, strategies as st

from dyckflaws.bijections import complement
from dyckflaws.enumeration import enumerate_paths
from dyckflaws.paths import (
    InvalidCharacterError,
    OddLengthError,
    Path,
    Step,
    UnbalancedError,
    height_profile,
    is_catalan,
    parse_path,
    render_path,
    stats,
)


@st.composite
def balanced_words(draw, max_semilength=6):
    n = draw(st.integers(0, max_semilength))
    return "".join(draw(st.permutations("U" * n + "D" * n)))


class TestParse:
    def test_empty_word(self):
        p = parse_path("")
        assert p.semilength == 0
        assert p.steps == ()

    def test_basic_word(self):
        p = parse_path("UDUD")
        assert p.semilength == 2
        assert p.steps == (Step.UP, Step.DOWN, Step.UP, Step.DOWN)

    def test_case_insensitive(self):
        assert parse_path("udUd") == parse_path("UDUD")

    def test_odd_length_rejected(self):
        with pytest.raises(OddLengthError):
            parse_path("UUD")

    def test_unbalanced_rejected(self):
        with pytest.raises(UnbalancedError):
            parse_path("UUUD")

    def test_foreign_character_rejected(self):
        with pytest.raises(InvalidCharacterError):
            parse_path("UX")

    def test_unbalanced_constructor(self):
        with pytest.raises(UnbalancedError):
            Path((Step.UP, Step.UP))


class TestRender:
    def test_empty(self):
        assert render_path(Path()) == ""

    def test_single_pair(self):
        assert render_path(Path((Step.UP, Step.DOWN))) == "UD"

    def test_flawed_word(self):
        word = (Step.DOWN, Step.UP, Step.UP, Step.DOWN)
        assert render_path(Path(word)) == "DUUD"

    @given(balanced_words())
    def test_roundtrip(self, word):
        assert render_path(parse_path(word)) == word.upper()

    def test_roundtrip_exhaustive_small(self):
        for n in range(7):
            for p in enumerate_paths(n):
                assert parse_path(render_path(p)) == p


class TestHeightProfile:
    def test_examples(self):
        assert height_profile(parse_path("UDUD")) == [0, 1, 0, 1, 0]
        assert height_profile(parse_path("DUUD")) == [0, -1, 0, 1, 0]
        assert height_profile(Path()) == [0]

    @given(balanced_words())
    def test_steps_and_endpoints(self, word):
        h = height_profile(parse_path(word))
        assert h[0] == 0 and h[-1] == 0
        assert all(abs(a - b) == 1 for a, b in zip(h, h[1:]))


class TestStats:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("UDDU", (2, 1, 1, 1, 0, 1)),
            ("DDUU", (2, 2, 0, 1, 1, 1)),
            ("UUDD", (2, 0, 1, 0, 1, 1)),
            ("", (0, 0, 0, 0, 0, 0)),
        ],
    )
    def test_examples(self, word, expected):
        v = stats(parse_path(word))
        assert (
            v.semilength,
            v.flaws,
            v.peaks,
            v.valleys,
            v.double_ascents,
            v.double_descents,
        ) == expected

    @given(balanced_words())
    def test_joint_nodes_cover_all_pairs(self, word):
        v = stats(parse_path(word))
        total = v.peaks + v.valleys + v.double_ascents + v.double_descents
        assert total == max(2 * v.semilength - 1, 0)

    def test_flaw_bounds_exhaustive(self):
        for n in range(9):
            for p in enumerate_paths(n):
                assert 0 <= stats(p).flaws <= n

    @given(balanced_words())
    def test_flaws_zero_iff_nonnegative_heights(self, word):
        p = parse_path(word)
        assert (stats(p).flaws == 0) == (min(height_profile(p)) >= 0)

    @given(balanced_words())
    def test_all_flawed_iff_complement_flawless(self, word):
        p = parse_path(word)
        assert (stats(p).flaws == p.semilength) == (
            stats(complement(p)).flaws == 0
        )


class TestIsCatalan:
    def test_examples(self):
        assert is_catalan(parse_path("UDUD"))
        assert not is_catalan(parse_path("DU"))
        assert is_catalan(Path())

    @given(balanced_words())
    def test_matches_flaw_count(self, word):
        p = parse_path(word)
        assert is_catalan(p) == (stats(p).flaws == 0)
