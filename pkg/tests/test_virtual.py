"""Virtual Poincare polynomials: product formula and both series forms."""

import math

import pytest

from confpoly.ring import ONE, LaurentPoly
from confpoly.virtual import (
    VirtualPoly,
    getzler_series_raw,
    virtual_ordered,
    virtual_unordered,
    virtual_unordered_series,
)


class TestVirtualOrdered:
    def test_two_punctures_three_points(self):
        vp = virtual_ordered(2, 3)
        assert vp.poly == LaurentPoly({6: 1, 4: -9, 2: 26, 0: -24})
        assert str(vp.poly) == "x^6-9x^4+26x^2-24"

    def test_plane_one_point(self):
        assert virtual_ordered(0, 1).poly == LaurentPoly({2: 1})

    def test_hand_expansion(self):
        # (x^2 - 1)(x^2 - 2)
        assert virtual_ordered(1, 2).poly == LaurentPoly({4: 1, 2: -3, 0: 2})

    def test_recursive_product(self):
        for k in range(5):
            for n in range(1, 9):
                fiber = LaurentPoly({2: 1, 0: -(k + n - 1)})
                assert virtual_ordered(k, n).poly == virtual_ordered(k, n - 1).poly * fiber

    def test_falling_factorial_specialization(self):
        for k in range(5):
            for n in range(7):
                for q in (2, 3, 5, 11):
                    expected = math.prod(q - k - j for j in range(n))
                    assert virtual_ordered(k, n).eval_x_squared(q) == expected


class TestVirtualUnorderedSeries:
    def test_two_punctures_three_points(self):
        got = virtual_unordered_series(2, 3)[3]
        assert got == LaurentPoly({6: 1, 4: -3, 2: 5, 0: -4})
        assert str(got) == "x^6-3x^4+5x^2-4"

    def test_plane_low_orders(self):
        s = virtual_unordered_series(0, 2)
        assert list(s.coeffs) == [
            ONE,
            LaurentPoly({2: 1}),
            LaurentPoly({4: 1, 2: -1}),
        ]

    def test_one_point_is_the_space(self):
        assert virtual_unordered_series(3, 1)[1] == LaurentPoly({2: 1, 0: -3})


class TestGetzlerRaw:
    def test_no_punctures_forms_coincide(self):
        assert getzler_series_raw(0, 5) == virtual_unordered_series(0, 5)

    def test_two_punctures_deep(self):
        assert getzler_series_raw(2, 12) == virtual_unordered_series(2, 12)

    def test_one_point(self):
        assert getzler_series_raw(1, 1)[1] == LaurentPoly({2: 1, 0: -1})

    def test_form_equivalence_sweep(self):
        for k in range(7):
            assert getzler_series_raw(k, 12) == virtual_unordered_series(k, 12)


class TestVirtualUnordered:
    def test_two_punctures_three_points(self):
        assert virtual_unordered(2, 3).poly == LaurentPoly({6: 1, 4: -3, 2: 5, 0: -4})

    def test_empty_configuration(self):
        assert virtual_unordered(0, 0).poly == ONE

    def test_one_point(self):
        assert virtual_unordered(2, 1).poly == LaurentPoly({2: 1, 0: -2})


class TestShapeInvariants:
    def test_monic_even_degree(self):
        for k in range(7):
            for n in range(11):
                for vp in (virtual_ordered(k, n), virtual_unordered(k, n)):
                    p = vp.poly
                    assert p.degree() == 2 * n
                    assert p.coefficient(2 * n) == 1
                    assert all(e % 2 == 0 and e >= 0 for e in p.support())

    def test_space_field_validated(self):
        with pytest.raises(ValueError):
            VirtualPoly(ONE, 0, 0, "diagonal")
        with pytest.raises(ValueError):
            virtual_ordered(-1, 2)
        with pytest.raises(ValueError):
            virtual_unordered_series(-1, 2)
