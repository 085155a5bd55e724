"""Quasi-polynomials: fitting, minimal periods, equivalence, arithmetic.

A quasi-polynomial of degree ``n`` and modulus ``D`` is
``f(k) = sum_i c[i][k mod D] * k**i`` with rational coefficient tables.
``fit`` reconstructs one from exact dilate counts by interpolating each
residue class separately; residue 0 is sampled at ``D, 2D, ...`` so no
convention for the count at 0 ever enters the fit. Two
quasi-polynomials are *equivalent* when their difference is an honest
polynomial (all periodic parts cancel); equivalent functions share a
period sequence, which is the fact the verification suite leans on.

Period sequences are reported constant term first: position ``i`` holds
the minimal period of the coefficient of ``k**i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import VerificationFailed
from .polynomials import interpolate

Counter = Callable[[int], object]  # k >= 1 -> exact count or rational value


@dataclass(frozen=True)
class QuasiPolynomial:
    degree: int
    modulus: int
    coeffs: tuple[tuple[Fraction, ...], ...]  # coeffs[i][r]: coefficient of k**i on k = r (mod D)

    def __post_init__(self) -> None:
        if self.degree < 0 or self.modulus < 1:
            raise ValueError("degree must be >= 0 and modulus >= 1")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("need one coefficient row per power")
        if any(len(row) != self.modulus for row in self.coeffs):
            raise ValueError("each coefficient row needs one entry per residue")

    def evaluate(self, k: int) -> Fraction:
        r = k % self.modulus
        acc = Fraction(0)
        power = 1
        for i in range(self.degree + 1):
            acc += self.coeffs[i][r] * power
            power *= k
        return acc

    def coefficient(self, i: int, k: int) -> Fraction:
        """Value of the coefficient function of ``k**i`` at argument ``k``."""
        if not 0 <= i <= self.degree:
            return Fraction(0)
        return self.coeffs[i][k % self.modulus]


def fit(counter: Counter, degree: int, modulus: int, verify: bool = True) -> QuasiPolynomial:
    """Reconstruct the quasi-polynomial behind ``counter`` exactly.

    For each residue ``r`` the polynomial through the ``degree + 1``
    samples ``r0, r0 + D, ..., r0 + degree*D`` (``r0 = r`` or ``D`` when
    ``r = 0``) is interpolated. A verification pass then checks
    ``degree + 2`` fresh samples beyond the interpolation window and
    raises :class:`VerificationFailed` on any mismatch, which signals a
    wrong degree or modulus.
    """
    if degree < 0 or modulus < 1:
        raise ValueError("degree must be >= 0 and modulus >= 1")
    table = [[Fraction(0)] * modulus for _ in range(degree + 1)]
    for r in range(modulus):
        r0 = r if r >= 1 else modulus
        xs = [r0 + j * modulus for j in range(degree + 1)]
        ys = [counter(x) for x in xs]
        poly = interpolate(xs, ys)
        for i in range(degree + 1):
            table[i][r] = poly[i]
    result = QuasiPolynomial(degree, modulus, tuple(tuple(row) for row in table))
    if verify:
        top = (degree + 1) * modulus
        for extra in range(1, degree + 3):
            k = top + extra
            expected = Fraction(counter(k))
            if result.evaluate(k) != expected:
                raise VerificationFailed(
                    f"fitted value {result.evaluate(k)} != sample {expected} at k={k}; "
                    "degree or modulus is wrong"
                )
    return result


def coefficient_period(f: QuasiPolynomial, i: int) -> int:
    """Minimal period of the coefficient function of ``k**i``."""
    if not 0 <= i <= f.degree:
        raise ValueError(f"coefficient index {i} out of range")
    row = f.coeffs[i]
    for d in range(1, f.modulus + 1):
        if f.modulus % d:
            continue
        if all(row[r] == row[r % d] for r in range(f.modulus)):
            return d
    return f.modulus


def period_sequence(f: QuasiPolynomial) -> tuple[int, ...]:
    """Minimal periods, constant coefficient first: ``(p_0, ..., p_n)``."""
    return tuple(coefficient_period(f, i) for i in range(f.degree + 1))


def equivalent(f: QuasiPolynomial, g: QuasiPolynomial) -> bool:
    """True when ``f - g`` is a polynomial, i.e. all periodic parts agree.

    Degrees may differ; missing coefficients are treated as zero.
    """
    span = math.lcm(f.modulus, g.modulus)
    for i in range(max(f.degree, g.degree) + 1):
        deltas = {f.coefficient(i, r) - g.coefficient(i, r) for r in range(span)}
        if len(deltas) > 1:
            return False
    return True


def add(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    span = math.lcm(f.modulus, g.modulus)
    degree = max(f.degree, g.degree)
    table = tuple(
        tuple(f.coefficient(i, r) + g.coefficient(i, r) for r in range(span))
        for i in range(degree + 1)
    )
    return QuasiPolynomial(degree, span, table)


def negate(f: QuasiPolynomial) -> QuasiPolynomial:
    return QuasiPolynomial(
        f.degree, f.modulus, tuple(tuple(-c for c in row) for row in f.coeffs)
    )


def scale(f: QuasiPolynomial, factor) -> QuasiPolynomial:
    factor = Fraction(factor)
    return QuasiPolynomial(
        f.degree, f.modulus, tuple(tuple(factor * c for c in row) for row in f.coeffs)
    )


def multiply_by_polynomial(f: QuasiPolynomial, poly: Sequence) -> QuasiPolynomial:
    """Multiply by a constant-coefficient polynomial (ascending coefficients)."""
    coefs = [Fraction(c) for c in poly]
    while coefs and coefs[-1] == 0:
        coefs.pop()
    if not coefs:
        return QuasiPolynomial(0, f.modulus, (tuple([Fraction(0)] * f.modulus),))
    degree = f.degree + len(coefs) - 1
    table = [[Fraction(0)] * f.modulus for _ in range(degree + 1)]
    for i in range(f.degree + 1):
        for j, b in enumerate(coefs):
            if b == 0:
                continue
            for r in range(f.modulus):
                table[i + j][r] += f.coeffs[i][r] * b
    return QuasiPolynomial(degree, f.modulus, tuple(tuple(row) for row in table))


def prefix_sum(f: QuasiPolynomial) -> QuasiPolynomial:
    """The quasi-polynomial ``g(k) = 1 + f(1) + ... + f(k)``.

    This is the dilate-count transform of taking a pyramid: the count of
    the base at dilate 0 enters as the conventional 1, so ``g(0) = 1``.
    The result again has modulus ``f.modulus`` and degree one higher, and
    is reconstructed by fitting exact partial sums.
    """
    running: list[Fraction] = [Fraction(1)]  # running[k] = g(k)

    def partial(k: int) -> Fraction:
        while len(running) <= k:
            running.append(running[-1] + f.evaluate(len(running)))
        return running[k]

    return fit(partial, f.degree + 1, f.modulus)


def to_dict(f: QuasiPolynomial) -> dict:
    return {
        "degree": f.degree,
        "modulus": f.modulus,
        "coeffs": [[str(c) for c in row] for row in f.coeffs],
        "period_sequence": list(period_sequence(f)),
    }
