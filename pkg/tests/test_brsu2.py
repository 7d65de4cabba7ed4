"""Tests for the additive generator tables and exact C_2 group evaluation."""

from __future__ import annotations

import pytest

from bredon.brsu2 import (
    additive_structure,
    evaluate_group_c2,
    freeness_scope_error,
    minimum_cutoff,
    plot_generators,
    sun_level_rank,
)
from bredon.cellgen import fixed_dim_formula
from bredon.mackey import AbGroup


class TestScope:
    def test_primes_accepted(self):
        for n in (2, 3, 5, 7, 11, 13):
            assert freeness_scope_error(n) is None

    def test_odd_squarefree_products_accepted(self):
        for n in (15, 35, 21, 105):
            assert freeness_scope_error(n) is None

    def test_rejected_orders(self):
        for n in (1, 4, 6, 9, 12, 30, 45):
            assert freeness_scope_error(n) is not None

    def test_additive_rejects_with_scope_message(self):
        with pytest.raises(ValueError, match="distinct odd primes"):
            additive_structure(4, 3)

    def test_product_of_two_odd_primes_accepted(self):
        structure = additive_structure(15, 4)
        assert structure.scope_tag == "formal"
        assert len(structure.generators) == 5


class TestAdditiveStructure:
    def test_c2_dimension_pairs(self):
        structure = additive_structure(2, 7)
        pairs = [
            (d.fixed_dim(1), d.total_dim) for _, d in structure.generators
        ]
        assert pairs == [
            (0, 0), (0, 4), (4, 8), (4, 12), (8, 16), (8, 20), (12, 24), (12, 28),
        ]
        assert structure.scope_tag == "evaluated"
        assert structure.verdict.passed

    def test_c3_fixed_dims(self):
        structure = additive_structure(3, 7)
        fixed = [d.fixed_dim(1) for _, d in structure.generators]
        assert fixed == [0, 0, 2, 4, 4, 6, 8, 8]

    def test_c7_fixed_dims(self):
        structure = additive_structure(7, 7)
        fixed = [d.fixed_dim(1) for _, d in structure.generators]
        assert fixed == [0, 0, 0, 0, 2, 2, 2, 4]

    def test_plot_points(self):
        assert plot_generators(additive_structure(3, 2)) == [(0, 0), (0, 4), (2, 8)]

    def test_plot_matches_formula(self):
        for n in (2, 3, 5, 7):
            points = plot_generators(additive_structure(n, 20))
            for k, (x, y) in enumerate(points):
                assert x == fixed_dim_formula(n, k)
                assert y == 4 * k

    def test_generator_positions_nondecreasing(self):
        for n in (2, 3, 5, 7, 15):
            points = plot_generators(additive_structure(n, 30))
            for (x1, y1), (x2, y2) in zip(points, points[1:]):
                assert x1 <= x2 and y1 <= y2


class TestSunLevelRank:
    def test_examples(self):
        assert sun_level_rank(0, 4) == 1
        assert sun_level_rank(2, 2) == 1
        assert sun_level_rank(3, 0) == 0
        assert sun_level_rank(0, 0) == 1
        assert sun_level_rank(-4, 0) == 0
        assert sun_level_rank(-4, 8) == 1


class TestEvaluateGroup:
    def test_degree_zero(self):
        group = evaluate_group_c2(0, 0)
        assert [(k, cls.label) for k, cls in group.summands] == [
            (0, "A"),
            (1, "braket_Z"),
        ]
        assert group.top_level == AbGroup(3)
        assert group.bottom_level == AbGroup(1)

    def test_four_sigma(self):
        group = evaluate_group_c2(0, 4)
        assert [(k, cls.label) for k, cls in group.summands] == [
            (0, "braket_Z"),
            (1, "A"),
        ]

    def test_odd_degree_vanishes(self):
        group = evaluate_group_c2(1, 0)
        assert group.summands == ()
        assert group.top_level.is_zero and group.bottom_level.is_zero

    def test_torsion_appears(self):
        group = evaluate_group_c2(-4, 8)
        labels = [cls.label for _, cls in group.summands]
        assert labels == ["braket_Z2", "R"]
        assert group.top_level == AbGroup(1, (2,))
        assert group.bottom_level == AbGroup(1)

    def test_cutoff_guard(self):
        with pytest.raises(ValueError, match="cutoff"):
            evaluate_group_c2(12, -12, 2)

    def test_distant_column_contributions_are_found(self):
        # at degree 12 - 12*sigma the fixed-degree-zero column is hit by
        # the two generators of ordinals 6 and 7
        group = evaluate_group_c2(12, -12)
        assert [(k, cls.label) for k, cls in group.summands] == [
            (0, "L"),
            (6, "braket_Z"),
            (7, "braket_Z"),
        ]

    def test_bottom_rank_reproduces_nonequivariant_answer(self):
        for m in range(-12, 13):
            for s in range(-12, 13):
                group = evaluate_group_c2(m, s)
                assert group.bottom_level.rank == sun_level_rank(m, s), (m, s)
                assert group.bottom_level.torsion == ()

    def test_stability_under_larger_cutoffs(self):
        for m in range(-12, 13, 3):
            for s in range(-12, 13, 3):
                base = minimum_cutoff(m, s)
                a = evaluate_group_c2(m, s, base)
                b = evaluate_group_c2(m, s, base + 10)
                assert a == b, (m, s)
