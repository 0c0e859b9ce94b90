import pytest

from dyckflaws.enumeration import StatKind, table_polynomial
from dyckflaws.series import (
    ONE,
    SeriesDomainError,
    X,
    XYPoly,
    Y,
    ZSeries,
    catalan_double_ascent_series,
    catalan_peak_series,
    catalan_valley_series,
    flawed_double_ascent_series,
    flawed_peak_series,
    oracle_coefficient_poly,
    peak_discriminant,
    run_identity_suite,
)
from dyckflaws.verification import (
    check_series_exponents,
    check_series_oracle_match,
    check_series_roundtrips,
)


def series(*coeffs, order=None):
    return ZSeries(list(coeffs), order)


class TestXYPoly:
    def test_merge_and_zero_drop(self):
        p = XYPoly([((1, 0), 2), ((1, 0), -2), ((0, 1), 3)])
        assert p.terms == {(0, 1): 3}

    def test_arithmetic(self):
        assert (X + Y) * (X - Y) == X * X - Y * Y
        assert X * 0 == XYPoly()
        assert (X + 1) - X == ONE

    def test_laurent_exponents(self):
        inv = XYPoly.monomial(1, -1, 0)
        assert (inv * X) == ONE
        assert inv.has_negative_exponent()
        assert not (X + Y).has_negative_exponent()

    def test_map_exponents(self):
        p = (X + 1) * (Y + 1)
        flipped = p.map_exponents(lambda kx, ky: (1 - kx, 1 - ky))
        assert flipped == p

    def test_halved(self):
        assert (X * 2 + 4).halved() == X + 2
        with pytest.raises(SeriesDomainError):
            (X * 3).halved()


class TestZSeriesArithmetic:
    def test_mul(self):
        a = series(1, 1, order=2)      # 1 + z
        b = series(1, -1, order=2)     # 1 - z
        assert a * b == series(1, 0, -1, order=2)

    def test_shift(self):
        assert ZSeries.constant(1, 3).shift_z(1) == series(0, 1, order=3)

    def test_add_scale_cancels(self):
        a = series(1, 2, 3)
        assert a + (a * -1) == ZSeries.constant(0, 2)

    def test_min_order(self):
        a = series(1, 1, 1, order=2)
        b = series(1, 1, order=1)
        assert (a * b).order == 1

    def test_coeff_beyond_truncation(self):
        with pytest.raises(SeriesDomainError):
            series(1, order=1).coeff(2)


class TestInverse:
    def test_geometric(self):
        inv = series(1, -1, order=3).inverse()
        assert inv == series(1, 1, 1, 1, order=3)

    def test_identity(self):
        one = ZSeries.constant(1, 4)
        assert one.inverse() == one

    def test_geometric_in_xz(self):
        inv = ZSeries([ONE, -X], 2).inverse()
        assert inv == ZSeries([ONE, X, X * X], 2)

    def test_non_unit_rejected(self):
        with pytest.raises(SeriesDomainError):
            series(2, 1).inverse()

    def test_roundtrip(self):
        s = series(1, 5, -3, 7, order=3)
        assert s * s.inverse() == ZSeries.constant(1, 3)


class TestSqrt:
    def test_one(self):
        one = ZSeries.constant(1, 4)
        assert one.sqrt() == one

    def test_perfect_square(self):
        s = series(1, -1, order=4)
        assert (s * s).sqrt() == s

    def test_discriminant_root(self):
        root = peak_discriminant(4).sqrt()
        assert root.coeff(1) == (ONE + X) * -1
        assert root.coeff(2) == X * -2
        assert root * root == peak_discriminant(4)

    def test_non_unit_rejected(self):
        with pytest.raises(SeriesDomainError):
            series(4, 1).sqrt()

    def test_odd_coefficient_rejected(self):
        with pytest.raises(SeriesDomainError):
            series(1, 1, order=3).sqrt()


class TestSolvers:
    def test_peak_series_coefficients(self):
        p0 = catalan_peak_series(6)
        assert p0.coeff(0) == ONE
        assert p0.coeff(4).terms == {(1, 0): 1, (2, 0): 6, (3, 0): 6, (4, 0): 1}

    def test_valley_series_coefficients(self):
        v0 = catalan_valley_series(6)
        assert v0.coeff(3).terms == {(0, 0): 1, (1, 0): 3, (2, 0): 1}

    def test_ascent_series_coefficients(self):
        a0 = catalan_double_ascent_series(6)
        assert a0.coeff(3).terms == {(0, 0): 1, (1, 0): 3, (2, 0): 1}

    def test_fixed_point_equations_hold(self):
        order = 8
        p0 = catalan_peak_series(order)
        assert p0 == 1 + (p0 * (p0 + (X - 1))).shift_z(1)
        v0 = catalan_valley_series(order)
        assert v0 == 1 + ((v0 - 1) * (v0 * X + 1) + 1).shift_z(1)
        a0 = catalan_double_ascent_series(order)
        assert a0 == 1 + (a0 * (1 - (a0 * X).shift_z(1)).inverse()).shift_z(1)


class TestTrivariateSeries:
    def test_peak_coefficients(self):
        P = flawed_peak_series(5)
        assert P.coeff(0) == ONE
        assert P.coeff(3).coeff(2, 1) == 3
        assert P.coeff(4).coeff(3, 2) == 3

    def test_ascent_coefficients(self):
        A = flawed_double_ascent_series(5)
        assert A.coeff(1).coeff(0, 0) == 1
        assert A.coeff(3).coeff(1, 2) == 3

    def test_ascent_flaw_independence(self):
        A = flawed_double_ascent_series(6)
        for n in range(1, 7):
            c = A.coeff(n)
            for k in range(n):
                vals = {c.coeff(k, m) for m in range(n + 1)}
                assert len(vals) == 1

    def test_matches_oracle(self):
        P = flawed_peak_series(6)
        A = flawed_double_ascent_series(6)
        for n in range(7):
            assert P.coeff(n) == oracle_coefficient_poly(n, StatKind.PEAK)
            assert A.coeff(n) == oracle_coefficient_poly(
                n, StatKind.DOUBLE_ASCENT
            )

    def test_flaw_slices_match_table_rows(self):
        P = flawed_peak_series(6)
        for m in range(4):
            sliced = P.y_slice(m)
            for n in range(m, 7):
                row = table_polynomial(n, m, StatKind.PEAK)
                for k in range(n + 1):
                    assert sliced.coeff(n).coeff(k, 0) == row.coefficient(k)


class TestIdentitySuite:
    def test_all_pass_at_order_six(self):
        reports = run_identity_suite(6)
        assert [r.identity for r in reports] == list("abcdefgh")
        assert all(r.status == "pass" for r in reports)
        assert all(r.first_failure is None for r in reports)

    def test_all_pass_at_order_zero(self):
        assert all(r.status == "pass" for r in run_identity_suite(0))

    def test_negative_control(self):
        reports = run_identity_suite(6, corrupt_peak_order=3)
        by_id = {r.identity: r for r in reports}
        assert by_id["a"].status == "fail"
        # the squared form multiplies by z, so the bump surfaces one
        # order above the corrupted coefficient
        assert by_id["a"].first_failure["n"] == 4
        assert any(r.status == "fail" for r in reports)

    def test_structural_checks(self):
        assert check_series_oracle_match(6, 6).passed
        assert check_series_roundtrips(6).passed
        assert check_series_exponents(6).passed
