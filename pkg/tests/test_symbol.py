"""Laurent symbol algebra."""

from fractions import Fraction as F

import pytest

from subdivkit.symbol import LaurentSymbol


def sym(lo, *coeffs):
    return LaurentSymbol.from_list(lo, [F(c) for c in coeffs])


class TestBasics:
    def test_trimming_and_support(self):
        a = LaurentSymbol({-2: F(0), -1: F(1, 2), 0: F(1), 1: F(1, 2), 3: F(0)})
        assert (a.lowest, a.highest) == (-1, 1)
        assert a.width == 3

    def test_interior_zeros_kept_in_dense_list(self):
        a = sym(-2, 1, 0, 3, 0, 1)
        assert a.coefficient_list() == [1, 0, 3, 0, 1]

    def test_evaluation_and_sums(self):
        a = sym(-1, "1/2", 1, "1/2")
        assert a(1) == 2
        assert a(-1) == 0
        assert a.even_sum() == 1
        assert a.odd_sum() == 1

    def test_derivative(self):
        a = sym(-1, 2, 5, 7)  # 2/z + 5 + 7z
        assert a.derivative() == LaurentSymbol({-2: F(-2), 0: F(7)})

    def test_reflect_shift_upsample(self):
        a = sym(0, 1, 2)
        assert a.reflected() == sym(-1, 2, 1)
        assert a.shifted(3) == sym(3, 1, 2)
        assert a.upsampled(2) == LaurentSymbol({0: F(1), 2: F(2)})


class TestOnePlusZ:
    def test_exact_quotient(self):
        # (1+z)^4 / (8 z^2)
        a = sym(-2, "1/8", "1/2", "3/4", "1/2", "1/8")
        q = a.try_divide_one_plus_z()
        assert q == sym(-2, "1/8", "3/8", "3/8", "1/8")

    def test_remainder_detected(self):
        assert sym(0, 1, 0, 1).try_divide_one_plus_z() is None

    @pytest.mark.parametrize(
        "symbol,expected",
        [
            (sym(-2, "1/8", "1/2", "3/4", "1/2", "1/8"), 4),
            (sym(-1, "1/2", 1, "1/2"), 2),
            (sym(0, 1), 0),
            (sym(-3, "-1/16", 0, "9/16", 1, "9/16", 0, "-1/16"), 4),
        ],
    )
    def test_multiplicity(self, symbol, expected):
        assert symbol.one_plus_z_multiplicity() == expected

    def test_multiplicity_times_quotient_reconstructs(self):
        a = sym(-2, "1/8", "1/2", "3/4", "1/2", "1/8")
        one_plus_z = sym(0, 1, 1)
        q = a
        for _ in range(a.one_plus_z_multiplicity()):
            q = q.try_divide_one_plus_z()
        rebuilt = q
        for _ in range(4):
            rebuilt = rebuilt * one_plus_z
        assert rebuilt == a
