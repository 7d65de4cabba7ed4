"""Tests for the named Mackey functor presentations and both point tables."""

from __future__ import annotations

import pytest

from bredon.mackey import (
    AbGroup,
    named_functor,
    point_cohomology_c2,
    point_cohomology_odd,
    position_of,
    res_after_tr,
    double_coset_holds,
    weyl_order_divides_p,
    weyl_orbit_sum,
)

ALL_LABELS_P2 = (
    "A",
    "A[d]",
    "R",
    "L",
    "R_minus",
    "L_minus",
    "braket_Z",
    "braket_Z2",
    "zero",
)
ALL_LABELS_ODD = ("A", "A[d]", "R", "L", "braket_Z", "braket_Zp", "zero")


class TestAbGroup:
    def test_torsion_order_normalized(self):
        assert AbGroup(1, (4, 2)) == AbGroup(1, (2, 4))

    def test_direct_sum(self):
        assert AbGroup(1, (2,)).direct_sum(AbGroup(2, (3,))) == AbGroup(3, (2, 3))

    def test_str(self):
        assert str(AbGroup(2, (2,))) == "Z + Z + Z/2"
        assert str(AbGroup(0)) == "0"


class TestNamedFunctors:
    def test_burnside_presentation(self):
        a = named_functor("A", 2)
        assert a.top == AbGroup(2)
        assert a.bottom == AbGroup(1)
        assert a.res == ((1, 2),)
        assert a.tr == ((0,), (1,))
        assert a.weyl == ((1,),)

    def test_twisted_burnside_keeps_symbol(self):
        a = named_functor("A[d]", 3)
        assert a.res == (("d", 3),)
        assert a.tr == ((0,), (1,))

    def test_restriction_functors(self):
        r = named_functor("R", 5)
        assert (r.res, r.tr) == (((1,),), ((5,),))
        el = named_functor("L", 5)
        assert (el.res, el.tr) == (((5,),), ((1,),))

    def test_signed_left(self):
        lm = named_functor("L_minus", 2)
        assert lm.top == AbGroup(0, (2,))
        assert lm.bottom == AbGroup(1)
        assert lm.res == ((0,),)
        assert lm.tr == ((1,),)
        assert lm.weyl == ((-1,),)

    def test_signed_right(self):
        rm = named_functor("R_minus", 2)
        assert rm.top == AbGroup(0)
        assert rm.bottom == AbGroup(1)
        assert rm.weyl == ((-1,),)

    def test_one_generator_functors(self):
        for label, expected_top in (
            ("braket_Z", AbGroup(1)),
            ("braket_Z2", AbGroup(0, (2,))),
            ("braket_Zp", AbGroup(0, (7,))),
        ):
            f = named_functor(label, 7)
            assert f.top == expected_top
            assert f.bottom == AbGroup(0)

    def test_invalid_combinations(self):
        with pytest.raises(ValueError):
            named_functor("R_minus", 3)
        with pytest.raises(ValueError):
            named_functor("L_minus", 5)
        with pytest.raises(ValueError):
            named_functor("A", 4)
        with pytest.raises(ValueError):
            named_functor("nope", 2)

    def test_double_coset_identity_everywhere(self):
        for label in ALL_LABELS_P2:
            assert double_coset_holds(named_functor(label, 2)), label
        for p in (3, 5, 7):
            for label in ALL_LABELS_ODD:
                assert double_coset_holds(named_functor(label, p)), (label, p)

    def test_res_tr_is_multiplication_by_p_when_untwisted(self):
        for p in (2, 3, 5):
            for label in ("A", "A[d]", "R", "L"):
                assert res_after_tr(named_functor(label, p)) == ((p,),)

    def test_res_tr_is_one_plus_weyl_for_signed(self):
        for label in ("R_minus", "L_minus"):
            f = named_functor(label, 2)
            assert res_after_tr(f) == ((0,),)
            assert weyl_orbit_sum(f) == ((0,),)

    def test_weyl_power_is_identity(self):
        for label in ALL_LABELS_P2:
            assert weyl_order_divides_p(named_functor(label, 2)), label
        for label in ALL_LABELS_ODD:
            assert weyl_order_divides_p(named_functor(label, 3)), label


class TestTableC2:
    def test_origin(self):
        assert point_cohomology_c2(0, 0).label == "A"

    def test_total_degree_zero_row(self):
        # the eleven drawn nodes of the total-degree-zero row
        row = {
            -5: "R_minus",
            -4: "R",
            -3: "R_minus",
            -2: "R",
            -1: "R_minus",
            0: "A",
            1: "R_minus",
            2: "L",
            3: "L_minus",
            4: "L",
            5: "L_minus",
        }
        for x, label in row.items():
            assert point_cohomology_c2(x, 0).label == label, x

    def test_fixed_degree_zero_column(self):
        for y in (-4, -3, -2, -1, 1, 2, 3, 4):
            assert point_cohomology_c2(0, y).label == "braket_Z"

    def test_torsion_strips(self):
        for x in (-2, -4):
            for y in (1, 2, 3, 4):
                assert point_cohomology_c2(x, y).label == "braket_Z2"
        for x in (3, 5):
            for y in (-1, -2, -3, -4):
                assert point_cohomology_c2(x, y).label == "braket_Z2"

    def test_sampled_dots(self):
        dots = [
            (1, 1), (1, -1), (1, 4), (2, 1), (2, -3), (-1, 1), (-1, -4),
            (-3, 2), (-3, -2), (-5, 1), (-5, -3), (4, -1), (4, -4), (5, 2),
            (3, 1), (-2, -1), (-2, -4), (-4, -2), (2, 4), (1, -3),
        ]
        assert len(dots) == 20
        for x, y in dots:
            assert point_cohomology_c2(x, y).label == "zero", (x, y)

    def test_dimension_axiom(self):
        # integer gradings sit on the diagonal x = y = n
        for n in range(-6, 7):
            label = point_cohomology_c2(n, n).label
            assert label == ("A" if n == 0 else "zero"), n

    def test_r_and_l_only_on_their_halves(self):
        for x in range(-8, 9):
            for y in range(-8, 9):
                label = point_cohomology_c2(x, y).label
                if label == "R":
                    assert y == 0 and x < 0 and x % 2 == 0
                if label == "L":
                    assert y == 0 and x > 0 and x % 2 == 0


class TestTableOdd:
    def test_origin_is_symbolic(self):
        assert point_cohomology_odd(0, 0, 3).label == "A[d]"

    def test_row_and_column(self):
        for p in (3, 5):
            for x in (-2, -4):
                assert point_cohomology_odd(x, 0, p).label == "R"
            for x in (2, 4):
                assert point_cohomology_odd(x, 0, p).label == "L"
            for y in (-4, -2, 2, 4):
                assert point_cohomology_odd(0, y, p).label == "braket_Z"

    def test_torsion_strips(self):
        assert point_cohomology_odd(-4, 2, 5).label == "braket_Zp"
        for x in (-2, -4):
            for y in (2, 4):
                assert point_cohomology_odd(x, y, 3).label == "braket_Zp"
        for x in (3, 5):
            for y in (-1, -3):
                assert point_cohomology_odd(x, y, 3).label == "braket_Zp"

    def test_parity_forces_zero(self):
        for x, y in [(1, 2), (0, 1), (-2, 3), (2, -1), (5, 0)]:
            assert point_cohomology_odd(x, y, 3).label == "zero"

    def test_window_dots(self):
        dots = [
            (1, 1), (1, 3), (2, 2), (2, 4), (3, 1), (3, 3), (4, 2), (4, 4),
            (5, 1), (5, 3), (-1, -1), (-1, -3), (-2, -2), (-2, -4), (-3, -1),
            (-3, -3), (-4, -2), (-4, -4), (-5, -1), (-5, -3), (-1, 1),
            (-1, 3), (-3, 1), (-3, 3), (-5, 1), (-5, 3), (1, -1), (1, -3),
            (2, -2), (2, -4), (4, -2), (4, -4),
        ]
        for x, y in dots:
            assert point_cohomology_odd(x, y, 3).label == "zero", (x, y)

    def test_requires_odd_prime(self):
        with pytest.raises(ValueError):
            point_cohomology_odd(0, 0, 2)
        with pytest.raises(ValueError):
            point_cohomology_odd(0, 0, 9)

    def test_r_and_l_only_on_their_halves(self):
        for x in range(-8, 9):
            for y in range(-8, 9):
                label = point_cohomology_odd(x, y, 3).label
                if label == "R":
                    assert y == 0 and x < 0 and x % 2 == 0
                if label == "L":
                    assert y == 0 and x > 0 and x % 2 == 0


class TestPosition:
    def test_position_of(self):
        assert position_of(0, 0) == (0, 0)
        assert position_of(-2, 0) == (-2, -2)
        assert position_of(0, 4) == (0, 4)
        assert position_of(2, 2) == (2, 4)
