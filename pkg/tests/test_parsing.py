from fractions import Fraction

import pytest

from fsplit import Ring
from fsplit.parsing import ParseError, parse_univariate

R = Ring(3, ("x", "y", "z"))


@pytest.mark.parametrize("text, expected", [
    ("x^2*y + 2*z", {(2, 1, 0): 1, (0, 0, 1): 2}),
    ("  x ^ 2 *y+2 * z ", {(2, 1, 0): 1, (0, 0, 1): 2}),
    ("-x", {(1, 0, 0): 2}),
    ("(x + y)^3", {(3, 0, 0): 1, (0, 3, 0): 1}),
    ("4", {(0, 0, 0): 1}),
    ("x - x", {}),
    ("3*x*y", {}),
])
def test_parse(text, expected):
    assert dict(R.parse(text).terms) == expected


@pytest.mark.parametrize("text, column", [
    ("x +", 4),
    ("x $ y", 3),
    ("w + x", 1),
    ("x^y", 3),
    ("(x + y", 7),
    ("", 1),
    ("x y", 3),
])
def test_parse_errors_report_column(text, column):
    with pytest.raises(ParseError) as info:
        R.parse(text)
    assert info.value.pos + 1 == column


def test_division_rejected_for_ring_elements():
    with pytest.raises(ParseError):
        R.parse("x/2")


def test_univariate():
    assert parse_univariate("n + 1") == (1, 1)
    assert parse_univariate("1/2*n^2 + 3/2*n + 1") == (1, Fraction(3, 2), Fraction(1, 2))
    assert parse_univariate("2") == (2,)
    assert parse_univariate("n - n") == ()
    with pytest.raises(ParseError):
        parse_univariate("m + 1")
