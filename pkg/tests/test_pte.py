import pytest

from ehrhart.errors import NotAvailable, RejectedSolution, SizeMismatch
from ehrhart.pte import (
    PteSolution,
    available_sizes,
    elem_sym,
    normalize,
    power_sum,
    product_identity_check,
    table_lookup,
    verify,
)


def test_power_sum():
    assert power_sum(2, [1, 2, 6]) == 41
    assert power_sum(0, [1, 2, 6]) == 3
    assert power_sum(5, []) == 0


def test_elem_sym():
    assert elem_sym(2, [1, 2, 6]) == 20
    assert elem_sym(0, [7, 8]) == 1
    assert elem_sym(3, [1, 2]) == 0
    assert elem_sym(1, [4, 5]) == 9


def test_verify_examples():
    assert verify(PteSolution((1, 2), (3, 0)))
    assert verify(PteSolution((1, 2, 6), (4, 5, 0)))
    assert not verify(PteSolution((1, 2), (2, 0)))
    assert not verify(PteSolution((1, 2), (0, 3)))  # zero must come last
    assert not verify(PteSolution((1, -2), (-1, 0)))


def test_normalize_examples():
    assert normalize((1, 5, 6), (2, 3, 7)) == PteSolution((1, 2, 6), (4, 5, 0))
    assert normalize((0, 3), (1, 2)) == PteSolution((1, 2), (3, 0))
    assert normalize((0, 4, 7, 11), (1, 2, 9, 10)) == PteSolution((1, 2, 9, 10), (4, 7, 11, 0))


def test_normalize_rejects_repeated_minimum():
    with pytest.raises(RejectedSolution):
        normalize((0, 5, 7), (0, 4, 8))  # equal sums/squares but min appears twice
    with pytest.raises(RejectedSolution):
        normalize((1, 2), (1, 3))  # not an equal-power-sum pair
    with pytest.raises(SizeMismatch):
        normalize((1, 2, 3), (1, 2))


def test_table_sizes():
    assert available_sizes() == [2, 3, 4, 5, 6, 7, 8, 9, 10, 12]


def test_table_entries_all_verify():
    for size in available_sizes():
        sol = table_lookup(size)
        assert sol.size == size
        assert verify(sol)
        assert product_identity_check(sol)


def test_table_small_witnesses():
    assert table_lookup(2) == PteSolution((1, 2), (3, 0))
    assert table_lookup(3) == PteSolution((1, 2, 6), (4, 5, 0))
    assert table_lookup(4) == normalize((0, 4, 7, 11), (1, 2, 9, 10))


def test_table_lookup_unavailable():
    with pytest.raises(NotAvailable):
        table_lookup(11)
    with pytest.raises(NotAvailable):
        table_lookup(13)
    with pytest.raises(NotAvailable):
        table_lookup(1)


def test_shift_invariance():
    for size in available_sizes():
        sol = table_lookup(size)
        for shift in (1, 2, 3):
            a = [x + shift for x in sol.s]
            b = [x + shift for x in sol.t]
            assert all(power_sum(k, a) == power_sum(k, b) for k in range(size))


def test_newton_consistency():
    # equal power sums through m-1 force equal elementary symmetric functions
    for size in available_sizes():
        sol = table_lookup(size)
        for k in range(size - 1):
            assert elem_sym(k, sol.s) == elem_sym(k, sol.t)


def test_product_identity_witnesses():
    # (x+1)(2x+1) - (3x+1) = 2x^2 and (x+1)(2x+1)(6x+1) - (4x+1)(5x+1) = 12x^3
    assert product_identity_check(PteSolution((1, 2), (3, 0)))
    assert product_identity_check(PteSolution((1, 2, 6), (4, 5, 0)))
    assert not product_identity_check(PteSolution((1, 3), (5, 0)))  # sums differ


def test_solution_size_validation():
    with pytest.raises(SizeMismatch):
        PteSolution((1, 2, 3), (3, 0))
