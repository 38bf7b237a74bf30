"""Hilbert functions and Hilbert polynomials of graded ideals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from fsplit.algebra import AlgebraError
from fsplit.ideal import Ideal
from fsplit.parsing import parse_univariate, trim


class HilbertWindowError(AlgebraError):
    """Interpolation did not agree with the Hilbert function past the window."""


def hilbert_function(I: Ideal, n: int) -> int:
    """dim (R/I)_n, counted as standard monomials outside the leading-term ideal."""
    if n < 0:
        return 0
    return len(I.standard_monomials(n))


class HilbertPolynomial:
    """Univariate polynomial with rational coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(Fraction(c) for c in trim(coeffs))

    @classmethod
    def parse(cls, text: str) -> "HilbertPolynomial":
        return cls(parse_univariate(text, "n"))

    def __call__(self, n) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * n + c
        return total

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HilbertPolynomial([other])
        if not isinstance(other, HilbertPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if c.denominator != 1:
                coef = f"{c.numerator}/{c.denominator}"
            else:
                coef = str(c.numerator)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"HilbertPolynomial({self})"


def interpolate(points: Sequence[tuple[int, int]]) -> HilbertPolynomial:
    """Lagrange interpolation through (x, y) pairs over the rationals."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    return HilbertPolynomial(coeffs)


def hilbert_polynomial(I: Ideal, window: int | None = None, check: int = 5,
                       period: int = 1) -> HilbertPolynomial:
    """Eventual polynomial agreeing with the Hilbert function.

    Samples ``nvars`` degrees starting at ``window`` (default: largest
    generator degree), spaced ``period`` apart, interpolates, then checks
    the next ``check`` sample points.  ``period > 1`` reads "eventually"
    as "for all sufficiently divisible n", which matters for weighted
    gradings where the Hilbert function is only quasi-polynomial.
    """
    I._require_graded()
    if window is None:
        window = max(I.max_generator_degree(), 0)
    if period > 1:
        window = -(-window // period) * period
    count = I.ring.nvars
    xs = [window + period * k for k in range(count + check)]
    values = [(x, hilbert_function(I, x)) for x in xs]
    poly = interpolate(values[:count])
    for x, y in values[count:]:
        if poly(x) != y:
            raise HilbertWindowError(
                "window too small: interpolant %s gives %s at n=%d, Hilbert function %d"
                % (poly, poly(x), x, y))
    return poly
