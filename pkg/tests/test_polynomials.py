import pytest

from dyckflaws.polynomials import IntPolynomial, format_poly


def test_trailing_zeros_stripped():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0)).coeffs == ()


def test_degree():
    assert IntPolynomial().degree == -1
    assert IntPolynomial((5,)).degree == 0
    assert IntPolynomial((0, 0, 3)).degree == 2


def test_arithmetic():
    a = IntPolynomial((1, 2))       # 1 + 2x
    b = IntPolynomial((0, 1, 1))    # x + x^2
    assert (a + b).coeffs == (1, 3, 1)
    assert (a - a).coeffs == ()
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert a.shifted(2).coeffs == (0, 0, 1, 2)
    assert a.scaled(-1).coeffs == (-1, -2)


def test_eval():
    p = IntPolynomial((1, 0, 3))    # 1 + 3x^2
    assert p(0) == 1
    assert p(2) == 13
    assert p(1) == sum(p.coeffs)


def test_immutability():
    p = IntPolynomial((1,))
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ((), "0"),
        ((1,), "1"),
        ((0, 1), "x"),
        ((1, 1), "x+1"),
        ((0, 3, 17, 18, 4), "4x^4+18x^3+17x^2+3x"),
        ((0, -2, 1), "x^2-2x"),
        ((-1,), "-1"),
    ],
)
def test_format(coeffs, text):
    assert format_poly(IntPolynomial(coeffs)) == text
