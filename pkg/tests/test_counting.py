import random
from fractions import Fraction

import pytest
from oracles import brute_count, brute_count_union

from ehrhart import constructions as C
from ehrhart.counting import (
    CountFunction,
    count,
    count_convex,
    count_series,
    count_union,
)
from ehrhart.errors import BudgetExceeded, MissingIntersection
from ehrhart.polytope import PolytopalUnion, from_vertices, product, pyramid
from ehrhart.pte import PteSolution

SOL2 = PteSolution((1, 2), (3, 0))
SOL3 = PteSolution((1, 2, 6), (4, 5, 0))


def test_segment_counts():
    seg = C.segment(2)
    assert [count_convex(seg, k) for k in (1, 2, 5)] == [1, 2, 3]
    assert [count_convex(seg, k) for k in range(1, 9)] == [k // 2 + 1 for k in range(1, 9)]


def test_pentagon_counts():
    pent = C.pentagon(2)
    assert count_convex(pent, 1) == 12
    assert count_convex(pent, 2) == 34


def test_heptagon_counts():
    hep = C.heptagon(2)
    assert [count_convex(hep, k) for k in range(1, 5)] == [12, 47, 88, 165]


def test_counts_match_barycentric_oracle():
    for body in [C.pentagon(2), C.simplex(3, 2), C.middle(3, 2), C.pentagon_pyramid(3, 2)]:
        for k in (1, 2):
            assert count_convex(body, k) == brute_count(body.vertices, k)


def test_count_series():
    assert count_series(C.segment(3), 4) == [1, 1, 2, 2]
    origin = from_vertices([(0, 0)])
    assert count_series(origin, 5) == [1] * 5
    assert count_series(C.simplex(3, 2), 4) == [2, 4, 6, 9]


def test_count_rejects_nonpositive_dilates():
    with pytest.raises(ValueError):
        count_convex(C.segment(2), 0)


def test_lower_dimensional_and_off_lattice():
    # the segment x = 1/2 in the plane has lattice points only at even dilates
    flat = from_vertices([(Fraction(1, 2), 0), (Fraction(1, 2), 1)])
    assert [count_convex(flat, k) for k in range(1, 5)] == [0, 3, 0, 5]


def test_point_counts():
    half = from_vertices([(Fraction(1, 2),)])
    assert [count_convex(half, k) for k in range(1, 5)] == [0, 1, 0, 1]


def test_union_counts_and_strategy_equivalence():
    union = C.barn(3, 2, SOL2)
    assert count_union(union, 1) == 48
    assert count_union(union, 2) == 253
    for k in range(1, 5):
        assert count_union(union, k, strategy="enumerate") == count_union(
            union, k, strategy="inclusion-exclusion"
        )
    union4 = C.barn(4, 2, SOL3)
    for k in range(1, 5):
        assert count_union(union4, k, strategy="enumerate") == count_union(
            union4, k, strategy="inclusion-exclusion"
        )


def test_union_matches_brute_oracle():
    union = C.barn(3, 2, SOL2)
    piece_vertices = [p.vertices for p in union.pieces]
    assert count_union(union, 1) == brute_count_union(piece_vertices, 1)


def test_single_piece_union_equals_convex():
    pent = C.pentagon(2)
    union = PolytopalUnion(2, (pent,))
    for k in (1, 2, 3):
        assert count_union(union, k) == count_convex(pent, k)


def test_missing_intersection_raises():
    box1 = product(C.interval(0, 2), C.interval(0, 2))
    box2 = product(C.interval(1, 3), C.interval(0, 2))
    fact1 = (((0,), C.interval(0, 2)), ((1,), C.interval(0, 2)))
    fact2 = (((0,), C.interval(1, 3)), ((1,), C.interval(0, 2)))
    union = PolytopalUnion(2, (box1, box2), None, (fact1, fact2), None)
    with pytest.raises(MissingIntersection):
        count_union(union, 1, strategy="inclusion-exclusion")
    assert count_union(union, 1, strategy="enumerate") == 12  # [0,3] x [0,2]


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        count_convex(C.pentagon(2), 100, budget=10)
    with pytest.raises(BudgetExceeded):
        count_union(C.barn(3, 2, SOL2), 50, budget=10, strategy="enumerate")


def test_prism_law():
    for n in (3, 4):
        for p in (2, 3):
            q = C.q_value(p)
            prism_body = C.prism(n, p)
            simplex_body = C.simplex(n, p)
            for k in range(1, 9):
                assert count_convex(prism_body, k) == (2 * q * k + 1) * count_convex(
                    simplex_body, k
                )


def test_pyramid_prefix_sum_law():
    for p in (1, 2, 3):
        for base in (C.segment(p), C.pentagon(p)):
            apex = (0,) * base.ambient_dim + (1,)
            pyr = pyramid(base, apex)
            for k in range(1, 9):
                expected = 1 + sum(count_convex(base, j) for j in range(1, k + 1))
                assert count_convex(pyr, k) == expected


def test_product_count_multiplicativity():
    rng = random.Random(11)
    for _ in range(10):
        a = C.interval(rng.randint(-3, 0), rng.randint(1, 4))
        b = C.pentagon(rng.choice([1, 2, 3]))
        prod_body = product(a, b)
        for k in range(1, 7):
            assert count_convex(prod_body, k) == count_convex(a, k) * count_convex(b, k)


def test_translation_invariance():
    rng = random.Random(13)
    for body in [C.pentagon(2), C.simplex(3, 3), C.heptagon(3)]:
        shift = [rng.randint(-5, 5) for _ in range(body.ambient_dim)]
        moved = body.translate(shift)
        for k in range(1, 7):
            assert count_convex(moved, k) == count_convex(body, k)


def test_monotone_in_k_for_bodies_containing_origin():
    for body in [C.simplex(3, 2), C.heptagon(2), product(C.interval(-1, 1), C.interval(0, 2))]:
        assert body.contains((0,) * body.ambient_dim)
        series = count_series(body, 8)
        assert all(a <= b for a, b in zip(series, series[1:]))


def test_count_function_memoizes_and_tags():
    counter = CountFunction(C.pentagon(2))
    assert counter.strategy == "enumerate"
    assert counter(2) == 34
    assert counter.samples() == {2: 34}
    barn = C.barn(3, 2, SOL2)
    barn_counter = CountFunction(barn)
    assert barn_counter.strategy == "inclusion-exclusion"
    assert barn_counter(1) == 48
    assert count(barn, 1) == 48
