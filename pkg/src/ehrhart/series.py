"""Dilate-count generating functions as exact rational series.

A series is stored in the normal form ``N(t) / (1 - t^D)^m`` with an
explicit numerator polynomial. For a quasi-polynomial of degree ``n``
and modulus ``D`` the canonical denominator is ``(1 - t^D)^(n+1)``; the
numerator then has degree below ``D * (n + 1)``, which the constructor
verifies by checking that the defining product truncates. Taking a
pyramid over the underlying body divides the series by ``1 - t``,
realized here by multiplying the numerator by ``1 + t + ... + t^(D-1)``
and raising the denominator power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonterminatingNumerator
from .polynomials import poly_mul, poly_neg, poly_trim
from .quasipoly import QuasiPolynomial, equivalent, fit


@dataclass(frozen=True)
class EhrhartSeries:
    numerator: tuple[Fraction, ...]  # ascending coefficients
    modulus: int  # D in (1 - t^D)^power
    power: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or self.power < 1:
            raise ValueError("modulus and power must be positive")


def from_quasipolynomial(f: QuasiPolynomial) -> EhrhartSeries:
    """The series ``sum_k f(k) t^k`` over the denominator ``(1-t^D)^(n+1)``.

    The numerator is computed exactly as ``(1 - t^D)^(n+1)`` times the
    truncated series of ``f`` (the value at 0 comes from evaluating the
    residue-0 polynomial, which is 1 for genuine dilate counts). The
    product is checked to vanish well past the expected numerator degree;
    failure to truncate means ``f`` is not a quasi-polynomial of its
    declared degree and modulus.
    """
    D = f.modulus
    power = f.degree + 1
    bound = D * power  # numerator degree is < bound for a true quasi-polynomial
    check_to = 3 * D * power
    signs = [
        Fraction((-1) ** j * math.comb(power, j)) for j in range(power + 1)
    ]
    values = [f.evaluate(k) for k in range(check_to + 1)]
    coeffs = []
    for k in range(check_to + 1):
        acc = Fraction(0)
        for j in range(power + 1):
            if j * D > k:
                break
            acc += signs[j] * values[k - j * D]
        if k >= bound and acc != 0:
            raise NonterminatingNumerator(
                f"numerator coefficient {acc} at t^{k} (expected 0 past t^{bound - 1})"
            )
        coeffs.append(acc)
    return EhrhartSeries(tuple(poly_trim(coeffs[:bound])), D, power)


def expansion(series: EhrhartSeries, k_max: int) -> list[Fraction]:
    """Power-series coefficients at ``t^0 .. t^k_max``."""
    D, m = series.modulus, series.power
    out = []
    for k in range(k_max + 1):
        acc = Fraction(0)
        for j in range(k // D + 1):
            idx = k - j * D
            if idx < len(series.numerator):
                acc += math.comb(m - 1 + j, m - 1) * series.numerator[idx]
        out.append(acc)
    return out


def negate(series: EhrhartSeries) -> EhrhartSeries:
    return EhrhartSeries(tuple(poly_neg(series.numerator)), series.modulus, series.power)


def pyramid_transform(series: EhrhartSeries, i: int) -> EhrhartSeries:
    """Divide by ``(1 - t)^i``: the series of an ``i``-fold pyramid."""
    if i < 1:
        raise ValueError("pyramid transform needs i >= 1")
    ones = [Fraction(1)] * series.modulus
    numerator = list(series.numerator)
    for _ in range(i):
        numerator = poly_mul(numerator, ones)
    return EhrhartSeries(tuple(numerator), series.modulus, series.power + i)


def normalized(series: EhrhartSeries, modulus: int, power: int) -> EhrhartSeries:
    """Rewrite over ``(1 - t^modulus)^power``; requires D | modulus, power >= m."""
    D, m = series.modulus, series.power
    if modulus % D or power < m:
        raise ValueError("target denominator must be a multiple form")
    numerator = list(series.numerator)
    if modulus != D:
        step = [Fraction(0)] * modulus
        for j in range(0, modulus, D):
            step[j] = Fraction(1)  # (1 - t^modulus) / (1 - t^D)
        for _ in range(m):
            numerator = poly_mul(numerator, step)
    for _ in range(power - m):
        big = [Fraction(0)] * (modulus + 1)
        big[0] = Fraction(1)
        big[modulus] = Fraction(-1)
        numerator = poly_mul(numerator, big)
    return EhrhartSeries(tuple(numerator), modulus, power)


def refit(series: EhrhartSeries) -> QuasiPolynomial:
    """Recover the quasi-polynomial from the expansion coefficients."""
    degree = series.power - 1
    D = series.modulus
    need = D * (degree + 1) + degree + 2
    values = expansion(series, need)
    return fit(lambda k: values[k], degree, D)


def series_equivalent(first: EhrhartSeries, second: EhrhartSeries) -> bool:
    """Equivalence of the underlying quasi-polynomials (difference is a polynomial)."""
    return equivalent(refit(first), refit(second))


def to_dict(series: EhrhartSeries) -> dict:
    return {
        "numerator": [
            int(c) if c.denominator == 1 else str(c) for c in series.numerator
        ],
        "modulus": series.modulus,
        "power": series.power,
    }
