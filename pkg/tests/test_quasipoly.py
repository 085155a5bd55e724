from fractions import Fraction

import pytest

from ehrhart import constructions as C
from ehrhart.counting import CountFunction, count_convex
from ehrhart.errors import VerificationFailed
from ehrhart.polytope import denominator, product, pyramid
from ehrhart.quasipoly import (
    QuasiPolynomial,
    add,
    coefficient_period,
    equivalent,
    fit,
    multiply_by_polynomial,
    negate,
    period_sequence,
    prefix_sum,
    scale,
    to_dict,
)

F = Fraction


def fit_body(body, budget=None):
    return fit(CountFunction(body, budget), body.intrinsic_dim, denominator(body))


def test_fit_segment():
    qp = fit_body(C.segment(2))
    assert qp.coeffs[1] == (F(1, 2), F(1, 2))  # slope 1/2 on both residues
    assert qp.coeffs[0] == (F(1), F(1, 2))  # 1 on even, 1/2 on odd
    assert qp.evaluate(7) == count_convex(C.segment(2), 7)
    assert qp.evaluate(0) == 1


def test_fit_pentagon():
    qp = fit_body(C.pentagon(2))
    assert qp.coeffs[2] == (F(6), F(6))  # leading term = area
    assert qp.coeffs[1] == (F(9, 2), F(9, 2))
    assert qp.coeffs[0] == (F(1), F(3, 2))
    assert qp.evaluate(1) == 12 and qp.evaluate(2) == 34
    # identity on the whole sample window, not just the interpolation nodes
    for k in range(1, 12):
        assert qp.evaluate(k) == count_convex(C.pentagon(2), k)


def test_fit_constant_counter():
    qp = fit(lambda k: 1, 0, 1)
    assert qp.coeffs == ((F(1),),)
    assert qp.evaluate(17) == 1


def test_fit_off_lattice_point():
    # a single point at 1/2 is hit only by even dilates: degree 0, period 2
    from ehrhart.polytope import from_vertices

    half = from_vertices([(F(1, 2),)])
    qp = fit(CountFunction(half), 0, 2)
    assert qp.coeffs == ((F(1), F(0)),)
    assert period_sequence(qp) == (2,)


def test_fit_detects_wrong_modulus():
    with pytest.raises(VerificationFailed):
        fit(CountFunction(C.segment(2)), 1, 1)  # true modulus is 2


def test_fit_detects_wrong_degree():
    with pytest.raises(VerificationFailed):
        fit(CountFunction(C.pentagon(2)), 1, 2)  # true degree is 2


def test_coefficient_periods_segment():
    qp = fit_body(C.segment(2))
    assert coefficient_period(qp, 0) == 2
    assert coefficient_period(qp, 1) == 1


def test_period_sequence_examples():
    assert period_sequence(fit_body(C.heptagon(2))) == (1, 2, 1)
    assert period_sequence(fit_body(C.simplex(3, 2))) == (2, 1, 1)
    square = product(C.interval(0, 1), C.interval(0, 1))
    assert period_sequence(fit_body(square)) == (1, 1, 1)


def test_heptagon_middle_coefficient_values():
    qp = fit_body(C.heptagon(2))
    assert qp.coefficient(1, 1) == 2  # odd dilates
    assert qp.coefficient(1, 2) == 5  # even dilates


def test_equivalence_pentagon_segment():
    fp = fit_body(C.pentagon(2))
    fl = fit_body(C.segment(2))
    assert equivalent(fp, negate(fl))
    assert equivalent(fp, fp)
    assert not equivalent(fit_body(C.segment(2)), fit_body(C.segment(3)))


def test_equivalent_implies_same_period_sequence():
    pairs = [
        (fit_body(C.pentagon(2)), negate(fit_body(C.segment(2)))),
        (fit_body(C.simplex(3, 3)), negate(fit_body(C.pentagon_pyramid(3, 3)))),
    ]
    for f, g in pairs:
        assert equivalent(f, g)
        # pad to a common degree before comparing
        top = max(f.degree, g.degree)
        pf = period_sequence(f) + (1,) * (top - f.degree)
        pg = period_sequence(g) + (1,) * (top - g.degree)
        assert pf == pg


def test_arithmetic_rectangle_identity():
    # (2qx + 1) * segment count = rectangle count, q = 3
    fl = fit_body(C.segment(2))
    rect = multiply_by_polynomial(fl, [1, 6])
    assert rect.evaluate(2) == 26 == count_convex(C.rectangle(2), 2)
    for k in range(1, 8):
        assert rect.evaluate(k) == count_convex(C.rectangle(2), k)


def test_add_negate_cancel():
    f = fit_body(C.pentagon(3))
    zero = add(f, negate(f))
    assert all(c == 0 for row in zero.coeffs for c in row)


def test_multiply_by_x_shifts_periods():
    fl = fit_body(C.segment(2))
    shifted = multiply_by_polynomial(fl, [0, 1])
    assert shifted.degree == 2
    assert period_sequence(shifted) == (1, 2, 1)


def test_scale():
    f = fit_body(C.segment(2))
    half = scale(f, F(1, 2))
    assert half.evaluate(4) == F(3, 2)


def test_prefix_sum_matches_pyramid_counts():
    fl = fit_body(C.segment(2))
    g = prefix_sum(fl)
    pyr = pyramid(C.segment(2), (0, 1))
    assert g.evaluate(2) == 4 == count_convex(pyr, 2)
    for k in range(1, 9):
        assert g.evaluate(k) == count_convex(pyr, k)
    assert g.evaluate(0) == 1


def test_prefix_sum_of_constant_one():
    one = fit(lambda k: 1, 0, 1)
    g = prefix_sum(one)
    assert [g.evaluate(k) for k in range(5)] == [1, 2, 3, 4, 5]


def test_iterated_prefix_sum_equivalent_to_simplex():
    for n in (3, 4):
        for p in (2, 3):
            g = fit_body(C.segment(p))
            for _ in range(n - 2):
                g = prefix_sum(g)
            direct = fit_body(C.simplex(n, p))
            # the prefix sums ARE the simplex counts, not merely equivalent
            for k in range(1, 10):
                assert g.evaluate(k) == direct.evaluate(k)
            assert equivalent(g, direct)


def test_additivity_over_integral_intersection():
    # heptagon = rectangle u pentagon glued along a lattice segment
    fh = fit_body(C.heptagon(2))
    fr = fit_body(C.rectangle(2))
    fp = fit_body(C.pentagon(2))
    assert equivalent(fh, add(fr, fp))


def test_leading_coefficient_constant_and_positive():
    for body in [C.pentagon(2), C.heptagon(3), C.simplex(3, 2), C.hull(3, 2)]:
        qp = fit_body(body)
        leading = set(qp.coeffs[qp.degree])
        assert len(leading) == 1
        assert leading.pop() > 0


def test_evaluate_row_validation():
    with pytest.raises(ValueError):
        QuasiPolynomial(1, 2, ((F(1),),))


def test_to_dict_serialization():
    payload = to_dict(fit_body(C.segment(2)))
    assert payload == {
        "degree": 1,
        "modulus": 2,
        "coeffs": [["1", "1/2"], ["1/2", "1/2"]],
        "period_sequence": [2, 1],
    }
